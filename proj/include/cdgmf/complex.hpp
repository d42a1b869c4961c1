#pragma once

#include <optional>

#include "cdgmf/cdg.hpp"
#include "cdgmf/fpmodule.hpp"

namespace cdgmf {

// 2-periodic complex C0 -e0-> C1 -e1-> C0 of f.p. k[x]-modules, maps on generators.
struct PeriodicComplex {
  FPModule C0, C1;
  PolyMatrix e0, e1;

  const FPModule& C(int parity) const { return parity % 2 == 0 ? C0 : C1; }
  const PolyMatrix& e(int parity) const { return parity % 2 == 0 ? e0 : e1; }
  bool has_free_components() const { return C0.has_free_presentation() && C1.has_free_presentation(); }
};

// e1*e0 and e0*e1 vanish modulo relations.
bool squares_to_zero(const PeriodicComplex& c);

// Hom complex: degree 0 = Hom(L0,M0) + Hom(L1,M1), degree 1 = Hom(L0,M1) + Hom(L1,M0),
// d(f) = d_M f - (-1)^|f| f d_L. Elements are vectorized row-major, blocks ordered by source parity.
PeriodicComplex hom_complex(const MatrixFactorization& L, const MatrixFactorization& M);
// Source with relations, target graded-free: components are {F : F * relations = 0}.
PeriodicComplex hom_complex(const FPCDGModule& L, const MatrixFactorization& M);

// Tensor complex of a right and a left module: d(y x) = d_N(y) x + (-1)^|y| y d_M(x).
// Generator y_i (x) x_j of N_a (x) M_b has index i * gens(M_b) + j; blocks ordered by N parity.
PeriodicComplex tensor_complex(const FPCDGModule& N, const FPCDGModule& M);
PeriodicComplex tensor_complex(const MatrixFactorization& N, const MatrixFactorization& M);

struct CohomologyPair {
  FPModule H0, H1;
  bool finite = true;
  long dim0 = 0, dim1 = 0;  // meaningful when finite
};

// H0 = ker e0 / im e1, H1 = ker e1 / im e0.
CohomologyPair cohomology(const PeriodicComplex& c);

// Vectorized even / odd elements of Hom(L, M), matching hom_complex's layout.
PolyMatrix vec_even(const PolyMatrix& f0, const PolyMatrix& f1);
PolyMatrix vec_odd(const PolyMatrix& h0, const PolyMatrix& h1);
GradedMap unvec_even(const PolyMatrix& v, const MatrixFactorization& L, const MatrixFactorization& M);
// Returns {h0 : L0 -> M1, h1 : L1 -> M0}.
GradedMap unvec_odd(const PolyMatrix& v, const MatrixFactorization& L, const MatrixFactorization& M);

}  // namespace cdgmf
