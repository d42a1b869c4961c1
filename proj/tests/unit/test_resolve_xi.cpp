#include "cdgmf/complex.hpp"
#include "cdgmf/errors.hpp"
#include "cdgmf/generators.hpp"
#include "cdgmf/homotopy.hpp"
#include "cdgmf/resolve.hpp"
#include "doctest.h"

using namespace cdgmf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

CDGRingSpec ring_xn(FieldSpec f, int n) { return CDGRingSpec(f, Poly::x_pow(f, n)); }

PolyMatrix M1(FieldSpec f, std::vector<long> c) { return PolyMatrix::from_ints(f, {{c}}); }

bool homotopic(const MFMorphism& a, const MFMorphism& b) {
  auto w = homotopy_witness(a, b);
  return w && check_witness(a, b, *w);
}

}  // namespace

TEST_CASE("resolve") {
  CDGRingSpec B = ring_xn(Q, 2);
  Resolution z = resolve(InstanceGenerator::cyclic_pair(B, Side::right, 0, 0));
  CHECK(z.P0.is_zero_object());
  CHECK(z.P1.is_zero_object());

  FPCDGModule N = InstanceGenerator::cyclic_pair(B, Side::right, 1, 1);
  Resolution r = resolve(N);
  CHECK(r.P0.rank0 == 2);
  CHECK(r.P0.rank1 == 2);
  CHECK(r.P1.rank0 == 2);
  CHECK(r.P1.rank1 == 2);
  CHECK_NOTHROW(check_resolution(r));

  InstanceGenerator gen(21);
  for (int it = 0; it < 40; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    Side side = it % 4 ? Side::right : Side::left;
    FPCDGModule X = gen.fpcdg(R, side, 2);
    Resolution rx = resolve(X);
    CHECK(rx.P1.side == side);
    for (int p = 0; p < 2; ++p) CHECK(rx.P1.rank(p) == rx.P0.rank(p) - X.comp(p).free_rank());
  }
}

TEST_CASE("dualize") {
  CDGRingSpec B = ring_xn(Q, 3);
  CHECK(dualize(MatrixFactorization::zero(B, Side::right)).is_zero_object());
  MatrixFactorization P(B, Side::right, M1(Q, {0, 1}), M1(Q, {0, 0, -1}));
  MatrixFactorization D = dualize(P);
  CHECK(D.side == Side::left);
  CHECK(is_valid(D));
  // The canonical double-dual identification carries a sign on the odd part.
  MatrixFactorization DD = dualize(D);
  CHECK(DD.side == Side::right);
  MFMorphism can{P, DD, PolyMatrix::identity(Q, 1), -PolyMatrix::identity(Q, 1)};
  CHECK(is_closed(can));

  InstanceGenerator gen(22);
  for (int it = 0; it < 30; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    MatrixFactorization X = gen.mf(R, Side::right, 0, 3), Y = gen.mf(R, Side::right, 0, 3),
                        Z = gen.mf(R, Side::right, 0, 3);
    CHECK(is_valid(dualize(X)));
    MFMorphism a = gen.closed_morphism(X, Y), b = gen.closed_morphism(Y, Z);
    CHECK(is_closed(dualize(a)));
    CHECK(dualize(compose(b, a)) == compose(dualize(a), dualize(b)));
    MFMorphism cx{X, dualize(dualize(X)), PolyMatrix::identity(f, X.rank0), -PolyMatrix::identity(f, X.rank1)};
    CHECK(is_closed(cx));
  }
}

TEST_CASE("totalize") {
  CDGRingSpec B = ring_xn(Q, 3);
  MatrixFactorization M = classical_mf(B, Side::left, 1);
  CHECK(totalize(CDGComplex{{M}, {}, 0}) == M);
  CHECK(totalize(CDGComplex{{M}, {}, 1}) == shift(M, 1));

  // 0 -> M -> M -> 0 along the identity.
  MatrixFactorization T = totalize(CDGComplex{{M, M}, {identity(M)}, 0});
  auto c = is_contractible(T);
  REQUIRE(c.contractible);
  CHECK(check_witness(identity(T), zero_morphism(T, T), *c.witness));

  CHECK_THROWS_AS(totalize(CDGComplex{{M, M, M}, {identity(M), identity(M)}, 0}), IllDefinedMap);
  PolyMatrix x = M1(Q, {0, 1});
  CHECK_THROWS_AS(totalize(CDGComplex{{M, M}, {MFMorphism{M, M, x, PolyMatrix::identity(Q, 1)}}, 0}),
                  NonClosedMorphism);

  InstanceGenerator gen(23);
  for (int it = 0; it < 30; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    Side side = it % 2 ? Side::left : Side::right;
    MatrixFactorization X = gen.mf(R, side, 0, 3), Y = gen.mf(R, side, 0, 3);
    MFMorphism g = gen.closed_morphism(X, Y);
    MatrixFactorization S = totalize(CDGComplex{{X, Y}, {g}, 0});
    CHECK(is_valid(S));
    // Tot(X -> Y) is cone(g)[-1] up to signs on blocks: S_p = X_p + Y_(p-1), cocone_p = Y_(p+1) + X_p.
    MatrixFactorization C = shift(cone(g).cone, 1);
    BlockLayout ls, lc;
    for (int p = 0; p < 2; ++p) {
      ls[static_cast<std::size_t>(p)] = {{"X" + std::to_string(p), X.rank(p)}, {"Y" + std::to_string(1 - p), Y.rank(1 - p)}};
      lc[static_cast<std::size_t>(p)] = {{"Y" + std::to_string(1 - p), Y.rank(1 - p)}, {"X" + std::to_string(p), X.rank(p)}};
    }
    auto iso = find_signed_block_iso(S, ls, C, lc);
    CHECK(iso.has_value());
    // Split exact X -> cone(g)... as 0 -> Y -> cone(g) -> X[1] -> 0.
    auto cr = cone(g);
    MatrixFactorization T3 = totalize(CDGComplex{{Y, cr.cone, shift(X, 1)}, {cr.incl, cr.proj}, 0});
    CHECK(is_contractible(T3).contractible);
  }
}

TEST_CASE("Koszul-type exact bicomplexes over w = 0 totalize to acyclic objects") {
  CDGRingSpec Z(Q, Poly(Q));
  InstanceGenerator gen(24);
  for (int it = 0; it < 10; ++it) {
    // p, q coprime: 0 -> X -(-q, p)-> X + X -(p, q)-> X -> 0 is exact.
    Poly p = Poly::from_ints(Q, {1, 1}), q = Poly::x_pow(Q, gen.uniform(1, 3));
    PolyMatrix d0 = PolyMatrix::from_ints(Q, {{{0, 1}}, {{0}}});
    MatrixFactorization X(Z, Side::left, d0.rows_range(0, 1), PolyMatrix(Q, 1, 1));
    MatrixFactorization X2 = direct_sum(X, X);
    PolyMatrix a = vstack(PolyMatrix::scalar(-q, 1), PolyMatrix::scalar(p, 1));
    PolyMatrix b = hstack(PolyMatrix::scalar(p, 1), PolyMatrix::scalar(q, 1));
    MFMorphism fa{X, X2, a, a}, fb{X2, X, b, b};
    MatrixFactorization T = totalize(CDGComplex{{X, X2, X}, {fa, fb}, 0});
    auto h = cohomology(PeriodicComplex{FPModule::free(Q, T.rank0), FPModule::free(Q, T.rank1), T.d0, T.d1});
    CHECK(h.H0.is_zero());
    CHECK(h.H1.is_zero());
  }
}

TEST_CASE("xi on objects") {
  CDGRingSpec B = ring_xn(Q, 2);
  CHECK(xi(InstanceGenerator::cyclic_pair(B, Side::right, 0, 0)).xi.is_zero_object());
  XiResult x = xi(InstanceGenerator::cyclic_pair(B, Side::right, 1, 1));
  CHECK(x.xi.side == Side::left);
  CHECK(is_valid(x.xi));
  CHECK(x.xi.rank0 == x.Q0.rank0 + x.Q1.rank1);

  InstanceGenerator gen(25);
  for (int it = 0; it < 20; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f, 1, 4);
    // Projective CDG-modules vanish.
    MatrixFactorization G = g_plus(R, Side::right, gen.uniform(0, 2), gen.uniform(0, 1)).module;
    CHECK(is_contractible(xi(FPCDGModule::from_mf(G)).xi).contractible);
    // So do contractible ones.
    FPCDGModule N = gen.fpcdg(R, Side::right, 1);
    FPCDGModule C = cone(identity(N)).cone;
    CHECK(is_contractible(xi(C).xi).contractible);
    CHECK(is_valid(xi(N).xi));
  }
}

TEST_CASE("xi on morphisms") {
  InstanceGenerator gen(26);
  for (int it = 0; it < 15; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f, 1, 4);
    FPCDGModule A = gen.fpcdg(R, Side::right, 1), Bm = gen.fpcdg(R, Side::right, 1), C = gen.fpcdg(R, Side::right, 1);
    XiResult xa = xi(A), xb = xi(Bm), xc = xi(C);
    CHECK(homotopic(xi_on_morphism(identity(A), xa, xa), identity(xa.xi)));
    CHECK(homotopic(xi_on_morphism(zero_morphism(A, Bm), xa, xb), zero_morphism(xb.xi, xa.xi)));
    FPMorphism fa = gen.fp_closed_morphism(A, Bm), fb = gen.fp_closed_morphism(Bm, C);
    MFMorphism lhs = xi_on_morphism(compose(fb, fa), xa, xc);
    MFMorphism rhs = compose(xi_on_morphism(fa, xa, xb), xi_on_morphism(fb, xb, xc));
    CHECK(homotopic(lhs, rhs));
    // A second lift, moved along the kernel of the target epi, is homotopic to the first.
    GradedMap pert{PolyMatrix(f, xb.resolution.P1.rank0, A.generators(0)),
                   PolyMatrix(f, xb.resolution.P1.rank1, A.generators(1))};
    for (PolyMatrix* m : {&pert.m0, &pert.m1})
      for (int i = 0; i < m->rows(); ++i)
        for (int j = 0; j < m->cols(); ++j) (*m)(i, j) = gen.poly(f, 1);
    CHECK(homotopic(xi_on_morphism(fa, xa, xb), xi_on_morphism(fa, xa, xb, &pert)));
  }
}
