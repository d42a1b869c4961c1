#include "cdgmf/cdg.hpp"
#include "cdgmf/errors.hpp"
#include "cdgmf/generators.hpp"
#include "doctest.h"

using namespace cdgmf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

PolyMatrix M1(FieldSpec f, std::vector<long> c) { return PolyMatrix::from_ints(f, {{c}}); }

CDGRingSpec ring_xn(FieldSpec f, int n) { return CDGRingSpec(f, Poly::x_pow(f, n)); }

bool graded_identity(const GradedMap& g, int r0, int r1, FieldSpec f) {
  return g.m0 == PolyMatrix::identity(f, r0) && g.m1 == PolyMatrix::identity(f, r1);
}

}  // namespace

TEST_CASE("validate examples") {
  CDGRingSpec B = ring_xn(Q, 3);
  CHECK_NOTHROW(validate(MatrixFactorization(B, Side::left, M1(Q, {0, 1}), M1(Q, {0, 0, 1}))));
  CHECK_THROWS_AS(validate(MatrixFactorization(B, Side::left, M1(Q, {0, 1}), M1(Q, {0, 1}))), CurvatureMismatch);
  CHECK_NOTHROW(validate(MatrixFactorization(B, Side::right, M1(Q, {0, 1}), M1(Q, {0, 0, -1}))));
  // The left curvature is wrong for a right module.
  CHECK_THROWS_AS(validate(MatrixFactorization(B, Side::right, M1(Q, {0, 1}), M1(Q, {0, 0, 1}))),
                  CurvatureMismatch);
  try {
    validate(MatrixFactorization(B, Side::left, M1(Q, {0, 1}), M1(Q, {0, 1})));
  } catch (const CurvatureMismatch& e) {
    CHECK(e.composite() == "d1*d0");
  }
}

TEST_CASE("validate with w = 0 is d^2 = 0") {
  CDGRingSpec B(Q, Poly(Q));
  CHECK(is_valid(MatrixFactorization(B, Side::left, M1(Q, {0, 1}), M1(Q, {}))));
  CHECK_FALSE(is_valid(MatrixFactorization(B, Side::left, M1(Q, {0, 1}), M1(Q, {1}))));
  // Non-square shapes are fine for complexes.
  PolyMatrix d0 = PolyMatrix::from_ints(Q, {{{1}}, {{0}}});
  PolyMatrix d1 = PolyMatrix(Q, 1, 2);
  CHECK(is_valid(MatrixFactorization(B, Side::left, d0, d1)));
}

TEST_CASE("validate finitely presented modules") {
  CDGRingSpec B = ring_xn(Q, 2);
  FPCDGModule N = InstanceGenerator::cyclic_pair(B, Side::right, 1, 1);
  CHECK(is_valid(N));
  // R/(x^3) is not killed by w = x^2, so zero differentials fail the curvature test.
  FPCDGModule bad = InstanceGenerator::cyclic_pair(B, Side::right, 3, 0);
  CHECK_THROWS_AS(validate(bad), CurvatureMismatch);
  // d0 = 1 : R/(x) -> R/(x^2) is not well-defined.
  FPCDGModule ill(B, Side::right, FPModule::cyclic(Poly::x_pow(Q, 1)), FPModule::cyclic(Poly::x_pow(Q, 2)),
                  M1(Q, {1}), M1(Q, {}));
  CHECK_THROWS_AS(validate(ill), IllDefinedMap);
}

TEST_CASE("shift") {
  CDGRingSpec B = ring_xn(Q, 3);
  MatrixFactorization M(B, Side::left, M1(Q, {0, 1}), M1(Q, {0, 0, 1}));
  CHECK(shift(M, 0) == M);
  CHECK(shift(M, 2) == M);
  CHECK(shift(M, -4) == M);
  MatrixFactorization S = shift(M, 1);
  CHECK(S.d0 == -M.d1);
  CHECK(S.d1 == -M.d0);

  InstanceGenerator gen(3);
  for (int it = 0; it < 30; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    Side side = it % 2 ? Side::left : Side::right;
    MatrixFactorization X = gen.mf(R, side, 1, 3);
    CHECK(X.rank0 == X.rank1);
    int a = gen.uniform(-3, 3), b = gen.uniform(-3, 3);
    CHECK(shift(X, a + b) == shift(shift(X, a), b));
    CHECK(shift(shift(X, 1), 1) == shift(X, 2));
    CHECK(is_valid(shift(X, a)));
    FPCDGModule N = gen.fpcdg(R, side, 2);
    CHECK(shift(N, a + b) == shift(shift(N, a), b));
    CHECK(is_valid(shift(N, 1)));
  }
}

TEST_CASE("direct sums") {
  CDGRingSpec B = ring_xn(Q, 3);
  MatrixFactorization M(B, Side::left, M1(Q, {0, 1}), M1(Q, {0, 0, 1}));
  CHECK(direct_sum(M, MatrixFactorization::zero(B, Side::left)) == M);
  InstanceGenerator gen(4);
  MatrixFactorization A = gen.mf(B, Side::left, 2, 2);
  MatrixFactorization S = direct_sum(M, A);
  CHECK(S.rank0 == 3);
  CHECK(S.rank1 == 3);
  CHECK_THROWS_AS(direct_sum(M, gen.mf(B, Side::right, 1, 1)), RingMismatch);
  for (int it = 0; it < 30; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    Side side = it % 2 ? Side::left : Side::right;
    CHECK(is_valid(direct_sum(gen.mf(R, side, 0, 3), gen.mf(R, side, 0, 3))));
    CHECK(is_valid(direct_sum(gen.fpcdg(R, side, 2), gen.fpcdg(R, side, 2))));
  }
}

TEST_CASE("cones and their split sequences") {
  InstanceGenerator gen(5);
  CDGRingSpec B = ring_xn(Q, 3);
  MatrixFactorization L = gen.mf(B, Side::left, 1, 1), M = gen.mf(B, Side::left, 2, 2);
  auto c = cone(gen.closed_morphism(L, M));
  CHECK(c.cone.rank0 == 3);
  CHECK(c.cone.rank1 == 3);

  // cone(0 -> M) is M, and the canonical inclusion is the identity.
  auto c0 = cone(zero_morphism(MatrixFactorization::zero(B, Side::left), M));
  CHECK(c0.cone == M);
  CHECK(c0.incl.f0 == PolyMatrix::identity(Q, M.rank0));
  CHECK(c0.incl.f1 == PolyMatrix::identity(Q, M.rank1));

  MatrixFactorization N(B, Side::left, M1(Q, {1}), M1(Q, {0, 0, 0, 1}));
  CHECK_THROWS_AS(cone(MFMorphism{N, N, M1(Q, {1}), M1(Q, {0})}), NonClosedMorphism);

  for (int it = 0; it < 40; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    Side side = it % 2 ? Side::left : Side::right;
    MatrixFactorization X = gen.mf(R, side, 0, 3), Y = gen.mf(R, side, 0, 3);
    auto r = cone(gen.closed_morphism(X, Y));
    CHECK(is_valid(r.cone));
    CHECK(is_closed(r.incl));
    CHECK(is_closed(r.proj));
    auto pi = compose(r.proj, r.incl);
    CHECK(pi.f0.is_zero());
    CHECK(pi.f1.is_zero());
    for (int p = 0; p < 2; ++p) {
      CHECK(r.incl_split.m(p) * r.incl.f(p) == PolyMatrix::identity(f, Y.rank(p)));
      CHECK(r.proj.f(p) * r.proj_split.m(p) == PolyMatrix::identity(f, X.rank(p + 1)));
      CHECK(r.incl.f(p) * r.incl_split.m(p) + r.proj_split.m(p) * r.proj.f(p) ==
            PolyMatrix::identity(f, r.cone.rank(p)));
    }
    // Finitely presented cones of closed maps validate as well.
    FPCDGModule A = gen.fpcdg(R, side, 2), Bm = gen.fpcdg(R, side, 2);
    auto fc = cone(gen.fp_closed_morphism(A, Bm));
    CHECK(is_valid(fc.cone));
    CHECK(is_closed(fc.incl));
    CHECK(is_closed(fc.proj));
  }
}

TEST_CASE("g_plus and g_minus") {
  CDGRingSpec B = ring_xn(Q, 3);
  CHECK(g_plus(B, Side::left, 0, 0).module.is_zero_object());
  CHECK(g_minus(B, Side::left, 0, 0).module.is_zero_object());

  // B[delta] (x) R: basis 1(x)m (even), delta(x)m (odd); delta.(1(x)m) = delta(x)m and
  // delta.(delta(x)m) = h m, so d0 = [1] and d1 = [w].
  MatrixFactorization G = g_plus(B, Side::left, 1, 0).module;
  CHECK(G.d0 == M1(Q, {1}));
  CHECK(G.d1 == M1(Q, {0, 0, 0, 1}));

  // Hom(B[delta], R) is isomorphic to G+(R)[1] through a sign on the odd part.
  MatrixFactorization Gm = g_minus(B, Side::left, 1, 0).module;
  MatrixFactorization S = shift(G, 1);
  MFMorphism iso{Gm, S, M1(Q, {1}), M1(Q, {-1})};
  CHECK(is_closed(iso));
  MFMorphism inv{S, Gm, M1(Q, {1}), M1(Q, {-1})};
  CHECK(is_closed(inv));
  CHECK(compose(inv, iso) == identity(Gm));

  InstanceGenerator gen(6);
  for (int it = 0; it < 30; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    Side side = it % 2 ? Side::left : Side::right;
    int r0 = gen.uniform(0, 3), r1 = gen.uniform(0, 3);
    for (const GFunctorResult& g : {g_plus(R, side, r0, r1), g_minus(R, side, r0, r1)}) {
      CHECK(is_valid(g.module));
      CHECK(g.module.rank0 == r0 + r1);
      CHECK(g.module.rank1 == r0 + r1);
      for (int p = 0; p < 2; ++p) {
        CHECK((g.quot.m(p) * g.sub.m(p)).is_zero());
        CHECK(g.sub.m(p).transpose() * g.sub.m(p) == PolyMatrix::identity(f, g.sub.m(p).cols()));
        CHECK(g.quot.m(p) * g.quot.m(p).transpose() == PolyMatrix::identity(f, g.quot.m(p).rows()));
        CHECK(g.sub.m(p).cols() + g.quot.m(p).rows() == r0 + r1);
      }
    }
    // Sub and quotient ranks of G+ are (r0, r1) and (r1, r0); of G- the reverse.
    GFunctorResult gp = g_plus(R, side, r0, r1), gm = g_minus(R, side, r0, r1);
    CHECK(gp.sub.m0.cols() == r0);
    CHECK(gp.quot.m0.rows() == r1);
    CHECK(gm.sub.m0.cols() == r1);
    CHECK(gm.quot.m0.rows() == r0);
  }
}

TEST_CASE("free cover is a closed epimorphism") {
  InstanceGenerator gen(7);
  CDGRingSpec B = ring_xn(Q, 2);
  FPCDGModule Z = InstanceGenerator::cyclic_pair(B, Side::right, 0, 0);
  CHECK(free_cover(Z).P0.is_zero_object());
  FreeCover c = free_cover(InstanceGenerator::cyclic_pair(B, Side::right, 1, 1));
  CHECK(c.P0.rank0 == 2);
  CHECK(c.P0.rank1 == 2);
  for (int it = 0; it < 40; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    Side side = it % 3 ? Side::right : Side::left;
    FPCDGModule N = gen.fpcdg(R, side, 3);
    FreeCover fc = free_cover(N);
    CHECK(is_valid(fc.P0));
    CHECK(is_closed(fc.epi));
    for (int p = 0; p < 2; ++p) CHECK(fp_cokernel(fc.epi.f(p), fc.epi.source.comp(p), N.comp(p)).is_zero());
  }
}

TEST_CASE("morphism algebra") {
  InstanceGenerator gen(8);
  for (int it = 0; it < 30; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    Side side = it % 2 ? Side::left : Side::right;
    MatrixFactorization A = gen.mf(R, side, 1, 2), Bm = gen.mf(R, side, 1, 2), C = gen.mf(R, side, 1, 2),
                        D = gen.mf(R, side, 1, 2);
    MFMorphism fa = gen.closed_morphism(A, Bm), fb = gen.closed_morphism(Bm, C), fc = gen.closed_morphism(C, D);
    CHECK(compose(identity(Bm), fa) == fa);
    CHECK(compose(fa, identity(A)) == fa);
    CHECK(is_closed(compose(fb, fa)));
    CHECK(compose(fc, compose(fb, fa)) == compose(compose(fc, fb), fa));
    CHECK(is_closed(shift(fa, 1)));
  }
  CDGRingSpec B = ring_xn(Q, 2);
  MatrixFactorization A = classical_mf(B, Side::left, 1);
  MatrixFactorization C = classical_mf(B, Side::left, 2);
  CHECK_THROWS_AS(compose(identity(A), identity(C)), DimensionMismatch);
}
