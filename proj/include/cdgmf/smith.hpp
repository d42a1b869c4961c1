#pragma once

#include <optional>
#include <vector>

#include "cdgmf/matrix.hpp"

namespace cdgmf {

// U * A * V = D with D diagonal, monic diagonal entries d_1 | d_2 | ... | d_r.
struct SmithForm {
  PolyMatrix U, V, D;
  PolyMatrix U_inv, V_inv;  // filled only when requested
  std::vector<Poly> invariant_factors;  // the nonzero diagonal entries, units included
  int rank = 0;
};

struct SmithOptions {
  bool transforms = true;
  bool inverses = false;
};

// Pivot rule: a nonzero entry of minimal degree, ties broken by lowest (row, col).
SmithForm smith_normal_form(const PolyMatrix& A, SmithOptions opts = {});

// Diagonal of the Smith form only; skips the transform bookkeeping.
std::vector<Poly> invariant_factors(const PolyMatrix& A);

int rank(const PolyMatrix& A);

struct LinearSolution {
  PolyMatrix particular;   // A * particular = b
  PolyMatrix homogeneous;  // columns: a free basis of ker A
};

// All solutions of A * X = b over k[x] (b may have several columns), or nullopt.
std::optional<LinearSolution> solve_linear(const PolyMatrix& A, const PolyMatrix& b);

// Columns freely generate ker A.
PolyMatrix kernel_basis(const PolyMatrix& A);

// Columns freely generate the submodule spanned by the columns of Z.
PolyMatrix column_span_basis(const PolyMatrix& Z);

}  // namespace cdgmf
