#include "cdgmf/oracle.hpp"

#include <vector>

#include "cdgmf/errors.hpp"

namespace cdgmf {

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense zeros(FieldSpec f, int r, int c) { return Dense(static_cast<std::size_t>(r), std::vector<Scalar>(static_cast<std::size_t>(c), Scalar::zero(f))); }

// Action of x on k[x]/(x^m) in the basis 1, x, ..., x^(m-1).
Dense shift_matrix(FieldSpec f, int m) {
  Dense X = zeros(f, m, m);
  for (int i = 0; i + 1 < m; ++i) X[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = Scalar::one(f);
  return X;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Dense& A) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && A[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[static_cast<std::size_t>(p)], A[static_cast<std::size_t>(r)]);
    auto& R = A[static_cast<std::size_t>(r)];
    Scalar inv = R[static_cast<std::size_t>(c)].inverse();
    for (auto& v : R) v = v * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& Ri = A[static_cast<std::size_t>(i)];
      Scalar q = Ri[static_cast<std::size_t>(c)];
      if (q.is_zero()) continue;
      for (int j = 0; j < cols; ++j) Ri[static_cast<std::size_t>(j)] = Ri[static_cast<std::size_t>(j)] - q * R[static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of {F in k^(p x q) : X_p F = F X_q}, each F flattened row-major.
std::vector<std::vector<Scalar>> module_maps(FieldSpec f, int q, int p) {
  Dense Xq = shift_matrix(f, q), Xp = shift_matrix(f, p);
  const int vars = p * q;
  Dense E = zeros(f, vars, vars);
  // Row (i, j) of X_p F - F X_q.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      auto& row = E[static_cast<std::size_t>(i * q + j)];
      for (int k = 0; k < p; ++k) row[static_cast<std::size_t>(k * q + j)] = row[static_cast<std::size_t>(k * q + j)] + Xp[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      for (int k = 0; k < q; ++k) row[static_cast<std::size_t>(i * q + k)] = row[static_cast<std::size_t>(i * q + k)] - Xq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
  std::vector<int> piv = rref(E);
  std::vector<bool> is_piv(static_cast<std::size_t>(vars), false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < vars; ++free) {
    if (is_piv[static_cast<std::size_t>(free)]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(vars), Scalar::zero(f));
    v[static_cast<std::size_t>(free)] = Scalar::one(f);
    for (std::size_t r = 0; r < piv.size(); ++r) v[static_cast<std::size_t>(piv[r])] = -E[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

long stable_hom_oracle(int a, int b, int n, FieldSpec f) {
  if (n < 2 || a <= 0 || b <= 0 || a >= n || b >= n) throw DimensionMismatch("stable_hom_oracle needs 0 < a, b < n");
  auto hom = module_maps(f, a, b);     // M_a -> M_b
  auto into = module_maps(f, a, n);    // M_a -> A
  auto out = module_maps(f, n, b);     // A -> M_b
  // Every map through A^r is a sum of maps through A.
  Dense span;
  for (const auto& H : into)
    for (const auto& G : out) {
      std::vector<Scalar> prod(static_cast<std::size_t>(a * b), Scalar::zero(f));
      for (int i = 0; i < b; ++i)
        for (int j = 0; j < a; ++j) {
          Scalar s = Scalar::zero(f);
          for (int k = 0; k < n; ++k) s = s + G[static_cast<std::size_t>(i * n + k)] * H[static_cast<std::size_t>(k * a + j)];
          prod[static_cast<std::size_t>(i * a + j)] = s;
        }
      span.push_back(std::move(prod));
    }
  long through = static_cast<long>(rref(span).size());
  return static_cast<long>(hom.size()) - through;
}

}  // namespace cdgmf
