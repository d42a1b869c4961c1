#pragma once

#include "cdgmf/field.hpp"

namespace cdgmf {

// Dimension over k of the stable Hom from k[x]/(x^a) to k[x]/(x^b) as modules over
// A = k[x]/(x^n): A-linear maps modulo those factoring through a free A-module.
// Dense linear algebra over k on monomial bases; requires 0 < a, b < n.
long stable_hom_oracle(int a, int b, int n, FieldSpec field = FieldSpec::rationals());

}  // namespace cdgmf
