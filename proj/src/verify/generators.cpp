#include "cdgmf/generators.hpp"

#include "cdgmf/complex.hpp"
#include "cdgmf/errors.hpp"
#include "cdgmf/smith.hpp"

namespace cdgmf {

namespace {

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 101, 65521};

// Columns span the closed degree-0 maps N -> M, as [vec f0; vec f1] (row-major blocks).
PolyMatrix closed_map_space(const FPCDGModule& N, const FPCDGModule& M) {
  FieldSpec f = N.field();
  const int n0 = N.generators(0), n1 = N.generators(1), m0 = M.generators(0), m1 = M.generators(1);
  const int s0 = m0 * n0, s1 = m1 * n1;
  const PolyMatrix& AN0 = N.comp0.presentation();
  const PolyMatrix& AN1 = N.comp1.presentation();
  const PolyMatrix& AM0 = M.comp0.presentation();
  const PolyMatrix& AM1 = M.comp1.presentation();
  // Auxiliary unknowns witness membership in the target relations.
  const int y0 = AM0.cols() * AN0.cols(), y1 = AM1.cols() * AN1.cols();
  const int z0 = AM1.cols() * n0, z1 = AM0.cols() * n1;
  const int cols = s0 + s1 + y0 + y1 + z0 + z1;
  const int rows = m0 * AN0.cols() + m1 * AN1.cols() + m1 * n0 + m0 * n1;
  PolyMatrix S(f, rows, cols);
  auto I = [&](int k) { return PolyMatrix::identity(f, k); };
  int r = 0, c = s0 + s1;
  // f0 A_N0 = A_M0 Y0
  S.set_block(r, 0, kron(I(m0), AN0.transpose()));
  S.set_block(r, c, -kron(AM0, I(AN0.cols())));
  r += m0 * AN0.cols();
  c += y0;
  // f1 A_N1 = A_M1 Y1
  S.set_block(r, s0, kron(I(m1), AN1.transpose()));
  S.set_block(r, c, -kron(AM1, I(AN1.cols())));
  r += m1 * AN1.cols();
  c += y1;
  // f1 d0_N - d0_M f0 = A_M1 Z0
  S.set_block(r, s0, kron(I(m1), N.d0.transpose()));
  S.set_block(r, 0, -kron(M.d0, I(n0)));
  S.set_block(r, c, -kron(AM1, I(n0)));
  r += m1 * n0;
  c += z0;
  // f0 d1_N - d1_M f1 = A_M0 Z1
  S.set_block(r, 0, kron(I(m0), N.d1.transpose()));
  S.set_block(r, s0, -kron(M.d1, I(n1)));
  S.set_block(r, c, -kron(AM0, I(n1)));
  return kernel_basis(S).rows_range(0, s0 + s1);
}

PolyMatrix unflatten(const PolyMatrix& v, int offset, int rows, int cols) {
  PolyMatrix m(v.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v(offset + i * cols + j, 0);
  return m;
}

}  // namespace

int InstanceGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

FieldSpec InstanceGenerator::field() {
  int k = uniform(0, 6);
  return k == 0 || k == 1 ? FieldSpec::rationals() : FieldSpec::prime(kPrimes[uniform(0, 5)]);
}

CDGRingSpec InstanceGenerator::ring(FieldSpec f, int min_n, int max_n) {
  return CDGRingSpec(f, Poly::x_pow(f, uniform(min_n, max_n)));
}

Poly InstanceGenerator::poly(FieldSpec f, int max_deg, int height) {
  int d = uniform(-1, max_deg);
  std::vector<long> c;
  for (int i = 0; i <= d; ++i) c.push_back(uniform(-height, height));
  return Poly::from_ints(f, c);
}

std::pair<PolyMatrix, PolyMatrix> InstanceGenerator::unimodular(FieldSpec f, int n, int steps) {
  PolyMatrix A = PolyMatrix::identity(f, n), Ainv = PolyMatrix::identity(f, n);
  if (n < 2) return {A, Ainv};
  for (int s = 0; s < steps; ++s) {
    int i = uniform(0, n - 1), j = uniform(0, n - 2);
    if (j >= i) ++j;
    Poly q = poly(f, 1, 2);
    // E = I + q e_ij: rows act on A, the inverse picks up I - q e_ij on the right.
    A.add_row_multiple(i, j, q);
    Ainv.add_col_multiple(j, i, -q);
  }
  return {A, Ainv};
}

MatrixFactorization InstanceGenerator::mf(const CDGRingSpec& ring, Side side, int min_rank, int max_rank) {
  FieldSpec f = ring.field;
  const int r = uniform(min_rank, max_rank);
  const int n = ring.w.degree();
  PolyMatrix D(f, r, r);
  for (int i = 0; i < r; ++i) D(i, i) = Poly::x_pow(f, uniform(0, n));
  auto [A, Ai] = unimodular(f, r);
  auto [B, Bi] = unimodular(f, r);
  PolyMatrix d0 = A * D * B;
  auto sol = solve_linear(d0, PolyMatrix::scalar(ring.curvature(side), r));
  if (!sol) throw InternalAssertionFailure("generator: d0 does not divide the curvature");
  return MatrixFactorization(ring, side, d0, sol->particular);
}

MFMorphism InstanceGenerator::closed_morphism(const MatrixFactorization& L, const MatrixFactorization& M) {
  FieldSpec f = L.field();
  PeriodicComplex hc = hom_complex(L, M);
  PolyMatrix K = kernel_basis(hc.e0);
  PolyMatrix v(f, K.rows(), 1);
  for (int j = 0; j < K.cols(); ++j) {
    Poly c = uniform(0, 2) == 0 ? Poly(f) : poly(f, 1, 2);
    if (!c.is_zero()) v += c * K.col(j);
  }
  GradedMap g = unvec_even(v, L, M);
  MFMorphism m{L, M, g.m0, g.m1};
  check_closed(m);
  return m;
}

FPCDGModule InstanceGenerator::cyclic_pair(const CDGRingSpec& ring, Side side, int a0, int a1) {
  FieldSpec f = ring.field;
  FPModule c0 = a0 > 0 ? FPModule::cyclic(Poly::x_pow(f, a0)) : FPModule::free(f, 0);
  FPModule c1 = a1 > 0 ? FPModule::cyclic(Poly::x_pow(f, a1)) : FPModule::free(f, 0);
  PolyMatrix d0(f, c1.generators(), c0.generators()), d1(f, c0.generators(), c1.generators());
  return FPCDGModule(ring, side, c0, c1, d0, d1);
}

FPCDGModule InstanceGenerator::fpcdg(const CDGRingSpec& ring, Side side, int max_rank) {
  FieldSpec f = ring.field;
  const int n = ring.w.degree();
  const int kind = uniform(0, 3);
  FPCDGModule N;
  if (kind == 0) {
    N = cyclic_pair(ring, side, uniform(0, n), uniform(0, n));
  } else {
    MatrixFactorization P = mf(ring, side, 1, max_rank);
    PolyMatrix phi0, phi1;
    if (kind == 1) {
      Poly p = Poly::x_pow(f, uniform(1, n));
      phi0 = PolyMatrix::scalar(p, P.rank0);
      phi1 = PolyMatrix::scalar(p, P.rank1);
    } else {
      MatrixFactorization Q = mf(ring, side, 1, max_rank);
      MFMorphism phi = closed_morphism(Q, P);
      phi0 = phi.f0;
      phi1 = phi.f1;
    }
    N = FPCDGModule(ring, side, FPModule(phi0), FPModule(phi1), P.d0, P.d1);
    if (kind == 3 && max_rank > 1) N = direct_sum(N, cyclic_pair(ring, side, uniform(0, n), 0));
  }
  validate(N);
  return N;
}

FPMorphism InstanceGenerator::fp_closed_morphism(const FPCDGModule& N, const FPCDGModule& M) {
  FieldSpec f = N.field();
  PolyMatrix K = closed_map_space(N, M);
  PolyMatrix v(f, K.rows(), 1);
  for (int j = 0; j < K.cols(); ++j) {
    Poly c = uniform(0, 2) == 0 ? Poly(f) : poly(f, 1, 2);
    if (!c.is_zero()) v += c * K.col(j);
  }
  const int n0 = N.generators(0), n1 = N.generators(1), m0 = M.generators(0), m1 = M.generators(1);
  FPMorphism g{N, M, unflatten(v, 0, m0, n0), unflatten(v, m0 * n0, m1, n1)};
  check_closed(g);
  return g;
}

MatrixFactorization classical_mf(const CDGRingSpec& ring, Side side, int a) {
  FieldSpec f = ring.field;
  const int n = ring.w.degree();
  if (a < 0 || a > n) throw DimensionMismatch("exponent out of range");
  PolyMatrix d0(f, 1, 1), d1(f, 1, 1);
  d0(0, 0) = Poly::x_pow(f, a);
  d1(0, 0) = side == Side::left ? Poly::x_pow(f, n - a) : -Poly::x_pow(f, n - a);
  return MatrixFactorization(ring, side, d0, d1);
}

}  // namespace cdgmf
