#include "cdgmf/smith.hpp"

#include "cdgmf/errors.hpp"

namespace cdgmf {

namespace {

// Working state of the elimination; transforms are updated alongside D.
struct Reducer {
  PolyMatrix D, U, V, Ui, Vi;
  bool track, inv;

  Reducer(const PolyMatrix& A, SmithOptions o) : D(A), track(o.transforms), inv(o.inverses) {
    FieldSpec f = A.field();
    if (track) {
      U = PolyMatrix::identity(f, A.rows());
      V = PolyMatrix::identity(f, A.cols());
    }
    if (inv) {
      Ui = PolyMatrix::identity(f, A.rows());
      Vi = PolyMatrix::identity(f, A.cols());
    }
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    D.swap_rows(i, j);
    if (track) U.swap_rows(i, j);
    if (inv) Ui.swap_cols(i, j);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    D.swap_cols(i, j);
    if (track) V.swap_cols(i, j);
    if (inv) Vi.swap_rows(i, j);
  }
  // row_t += q row_s
  void add_row(int t, int s, const Poly& q) {
    D.add_row_multiple(t, s, q);
    if (track) U.add_row_multiple(t, s, q);
    if (inv) Ui.add_col_multiple(s, t, -q);
  }
  // col_t += q col_s
  void add_col(int t, int s, const Poly& q) {
    D.add_col_multiple(t, s, q);
    if (track) V.add_col_multiple(t, s, q);
    if (inv) Vi.add_row_multiple(s, t, -q);
  }
  void scale_row(int i, const Scalar& c) {
    D.scale_row(i, c);
    if (track) U.scale_row(i, c);
    if (inv) Ui.scale_col(i, c.inverse());
  }
};

// Lowest-degree nonzero entry in the trailing block, ties by (row, col).
bool find_pivot(const PolyMatrix& D, int t, int& pi, int& pj) {
  int best = -1;
  for (int i = t; i < D.rows(); ++i)
    for (int j = t; j < D.cols(); ++j) {
      const Poly& e = D(i, j);
      if (e.is_zero()) continue;
      if (best < 0 || e.degree() < best) {
        best = e.degree();
        pi = i;
        pj = j;
        if (best == 0) return true;
      }
    }
  return best >= 0;
}

SmithForm run(const PolyMatrix& A, SmithOptions opts) {
  Reducer r(A, opts);
  PolyMatrix& D = r.D;
  const int m = D.rows(), n = D.cols();
  int t = 0;
  for (; t < m && t < n; ++t) {
    int pi = 0, pj = 0;
    if (!find_pivot(D, t, pi, pj)) break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);
    for (;;) {
      // Clear column t below the pivot; a nonzero remainder becomes the new pivot.
      int best_row = -1;
      for (int i = t + 1; i < m; ++i) {
        if (D(i, t).is_zero()) continue;
        auto [q, rem] = Poly::divmod(D(i, t), D(t, t));
        r.add_row(i, t, -q);
        if (!D(i, t).is_zero() && (best_row < 0 || D(i, t).degree() < D(best_row, t).degree()))
          best_row = i;
      }
      if (best_row >= 0) {
        r.swap_rows(t, best_row);
        continue;
      }
      int best_col = -1;
      for (int j = t + 1; j < n; ++j) {
        if (D(t, j).is_zero()) continue;
        auto [q, rem] = Poly::divmod(D(t, j), D(t, t));
        r.add_col(j, t, -q);
        if (!D(t, j).is_zero() && (best_col < 0 || D(t, j).degree() < D(t, best_col).degree()))
          best_col = j;
      }
      if (best_col >= 0) {
        r.swap_cols(t, best_col);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      int bad = -1;
      if (!D(t, t).is_unit()) {
        for (int i = t + 1; i < m && bad < 0; ++i)
          for (int j = t + 1; j < n; ++j)
            if (!D(i, j).is_zero() && !D(t, t).divides(D(i, j))) {
              bad = i;
              break;
            }
      }
      if (bad < 0) break;
      r.add_row(t, bad, Poly::constant(D.field(), 1));
    }
    if (!D(t, t).leading().is_one()) r.scale_row(t, D(t, t).leading().inverse());
  }

  SmithForm s;
  s.rank = t;
  for (int i = 0; i < t; ++i) s.invariant_factors.push_back(D(i, i));
  s.D = std::move(r.D);
  s.U = std::move(r.U);
  s.V = std::move(r.V);
  s.U_inv = std::move(r.Ui);
  s.V_inv = std::move(r.Vi);
  return s;
}

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& A, SmithOptions opts) {
  if (opts.inverses) opts.transforms = true;
  return run(A, opts);
}

std::vector<Poly> invariant_factors(const PolyMatrix& A) {
  return run(A, SmithOptions{false, false}).invariant_factors;
}

int rank(const PolyMatrix& A) { return run(A, SmithOptions{false, false}).rank; }

std::optional<LinearSolution> solve_linear(const PolyMatrix& A, const PolyMatrix& b) {
  if (A.rows() != b.rows()) throw DimensionMismatch("solve_linear: A and b have different row counts");
  FieldSpec f = A.field();
  SmithForm s = smith_normal_form(A);
  PolyMatrix c = s.U * b;  // D * y = c, x = V * y
  PolyMatrix y(f, A.cols(), b.cols());
  for (int k = 0; k < b.cols(); ++k) {
    for (int i = 0; i < A.rows(); ++i) {
      const Poly& ci = c(i, k);
      if (i < s.rank) {
        auto [q, rem] = Poly::divmod(ci, s.D(i, i));
        if (!rem.is_zero()) return std::nullopt;
        y(i, k) = q;
      } else if (!ci.is_zero()) {
        return std::nullopt;
      }
    }
  }
  LinearSolution sol;
  sol.particular = s.V * y;
  sol.homogeneous = s.V.cols_range(s.rank, A.cols() - s.rank);
  if (A * sol.particular != b) throw InternalAssertionFailure("solve_linear produced a non-solution");
  return sol;
}

PolyMatrix kernel_basis(const PolyMatrix& A) {
  SmithForm s = smith_normal_form(A);
  return s.V.cols_range(s.rank, A.cols() - s.rank);
}

PolyMatrix column_span_basis(const PolyMatrix& Z) {
  SmithForm s = smith_normal_form(Z);
  return (Z * s.V).cols_range(0, s.rank);
}

}  // namespace cdgmf
