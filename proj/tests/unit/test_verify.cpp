#include "cdgmf/errors.hpp"
#include "cdgmf/generators.hpp"
#include "cdgmf/oracle.hpp"
#include "cdgmf/verify.hpp"
#include "doctest.h"

using namespace cdgmf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

CDGRingSpec ring_xn(FieldSpec f, int n) { return CDGRingSpec(f, Poly::x_pow(f, n)); }

}  // namespace

TEST_CASE("pairing examples") {
  CDGRingSpec B = ring_xn(Q, 2);
  CheckReport z = check_pairing(InstanceGenerator::cyclic_pair(B, Side::right, 0, 0), classical_mf(B, Side::left, 1));
  CHECK(z.pass);
  CHECK(z.left == 0);
  CheckReport r = check_pairing(InstanceGenerator::cyclic_pair(B, Side::right, 1, 1), classical_mf(B, Side::left, 1));
  MESSAGE("pairing (R/x, R/x) vs (x, x): " << r.left << " " << r.right);
  CHECK(r.pass);
  CHECK(r.recompute_pass() == r.pass);
}

TEST_CASE("duality examples") {
  CDGRingSpec B = ring_xn(Q, 2);
  CheckReport z = check_duality(InstanceGenerator::cyclic_pair(B, Side::right, 0, 0),
                                InstanceGenerator::cyclic_pair(B, Side::right, 0, 0));
  CHECK(z.pass);
  CHECK(z.left == 0);
  FPCDGModule N = InstanceGenerator::cyclic_pair(B, Side::right, 1, 1);
  CheckReport r = check_duality(N, N);
  MESSAGE("duality (R/x, R/x): " << r.left << " " << r.right << " oracle " << r.oracle.value_or(-1));
  CHECK(r.pass);
  REQUIRE(r.oracle.has_value());
  CHECK(*r.oracle == 4 * stable_hom_oracle(1, 1, 2));
}

TEST_CASE("duality against the oracle on cyclic shapes") {
  InstanceGenerator gen(31);
  for (int it = 0; it < 12; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f, 2, 5);
    const int n = R.w.degree();
    FPCDGModule N = InstanceGenerator::cyclic_pair(R, Side::right, gen.uniform(0, n), gen.uniform(0, n));
    FPCDGModule K = InstanceGenerator::cyclic_pair(R, Side::right, gen.uniform(0, n), gen.uniform(0, n));
    CheckReport r = check_duality(N, K);
    CHECK(r.oracle.has_value());
    CHECK(r.pass);
    if (!r.pass) MESSAGE(to_json(r).dump());
  }
}

TEST_CASE("adjunction isomorphisms") {
  CDGRingSpec B = ring_xn(Q, 3);
  MatrixFactorization Z = MatrixFactorization::zero(B, Side::right);
  CHECK(check_adjunction_isos(Z, classical_mf(B, Side::left, 1), Z, classical_mf(B, Side::right, 1)).pass);
  CheckReport r = check_adjunction_isos(classical_mf(B, Side::right, 1), classical_mf(B, Side::left, 2),
                                        classical_mf(B, Side::right, 2), classical_mf(B, Side::right, 1));
  CHECK(r.pass);
  for (const auto& n : r.notes) MESSAGE(n);
  InstanceGenerator gen(32);
  for (int it = 0; it < 15; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f);
    CheckReport c = check_adjunction_isos(gen.mf(R, Side::right, 0, 3), gen.mf(R, Side::left, 0, 3),
                                          gen.mf(R, Side::right, 0, 3), gen.mf(R, Side::right, 0, 3));
    CHECK(c.pass);
    for (const auto& n : c.notes) MESSAGE(n);
  }
}

TEST_CASE("totalization lemmas") {
  CheckReport r = check_totalization_lemmas(5, 10, 10);
  for (const auto& n : r.notes) MESSAGE(n);
  CHECK(r.pass);
  CHECK(r.right == 20);
  CHECK(r.witnesses.size() == 20);
}

TEST_CASE("xi triangulated") {
  InstanceGenerator gen(33);
  for (int it = 0; it < 6; ++it) {
    FieldSpec f = gen.field();
    CDGRingSpec R = gen.ring(f, 1, 4);
    FPCDGModule A = gen.fpcdg(R, Side::right, 1), B = gen.fpcdg(R, Side::right, 1), C = gen.fpcdg(R, Side::right, 1);
    CheckReport r = check_xi_triangulated(gen.fp_closed_morphism(A, B), gen.fp_closed_morphism(B, C));
    for (const auto& n : r.notes) MESSAGE(n);
    CHECK(r.pass);
    CHECK(r.right == 8);
  }
}

TEST_CASE("reports are deterministic") {
  SelftestOptions o;
  o.seed = 3;
  o.count = 2;
  auto a = run_selftest(o), b = run_selftest(o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(serialize(to_json(a[i])) == serialize(to_json(b[i])));
    CHECK(a[i].pass == a[i].recompute_pass());
  }
  o.checks = {"nonsense"};
  CHECK_THROWS_AS(run_selftest(o), ParseError);
}
