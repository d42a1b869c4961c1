#include <random>

#include "cdgmf/errors.hpp"
#include "cdgmf/fpmodule.hpp"
#include "cdgmf/smith.hpp"
#include "doctest.h"

using namespace cdgmf;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

Poly P(FieldSpec f, std::vector<long> c) { return Poly::from_ints(f, c); }

Poly random_poly(std::mt19937_64& rng, FieldSpec f, int max_deg, int height = 3) {
  std::uniform_int_distribution<int> deg(-1, max_deg), coef(-height, height);
  int d = deg(rng);
  std::vector<long> c;
  for (int i = 0; i <= d; ++i) c.push_back(coef(rng));
  return Poly::from_ints(f, c);
}

PolyMatrix random_matrix(std::mt19937_64& rng, FieldSpec f, int r, int c, int max_deg) {
  PolyMatrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = random_poly(rng, f, max_deg);
  return m;
}

// Cofactor determinant; independent of the elimination code.
Poly det(const PolyMatrix& a) {
  const int n = a.rows();
  if (n == 0) return Poly::constant(a.field(), 1);
  if (n == 1) return a(0, 0);
  Poly d(a.field());
  for (int j = 0; j < n; ++j) {
    PolyMatrix minor(a.field(), n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = a(i, k);
    Poly term = a(0, j) * det(minor);
    d = (j % 2 == 0) ? d + term : d - term;
  }
  return d;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Determinantal divisors: gcd of all k x k minors.
std::vector<Poly> determinantal_divisors(const PolyMatrix& a) {
  std::vector<Poly> out;
  for (int k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Poly g(a.field());
    for (auto& r : rs)
      for (auto& c : cs) {
        PolyMatrix m(a.field(), k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) m(i, j) = a(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
        g = gcd(g, det(m));
      }
    if (g.is_zero()) break;
    out.push_back(g);
  }
  return out;
}

bool is_diagonal(const PolyMatrix& d) {
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (i != j && !d(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("field element canonical strings") {
  CHECK(Scalar::parse(Q, "6/8").to_string() == "3/4");
  CHECK(Scalar::parse(Q, "-2/1").to_string() == "-2");
  CHECK(Scalar::parse(F5, "-1").to_string() == "4");
  CHECK(Scalar::parse(F5, "1/2").to_string() == "3");
  CHECK_THROWS_AS(Scalar::parse(F5, "1/5"), DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse(Q, "1.5"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:4"), ParseError);
  CHECK(FieldSpec::parse("Fp:2147483647").p == 2147483647u);
  CHECK(FieldSpec::parse("Q").is_rationals());
}

TEST_CASE("polynomial arithmetic examples") {
  CHECK(gcd(P(Q, {-1, 0, 1}), P(Q, {-1, 1})) == P(Q, {-1, 1}));
  auto [q, r] = Poly::divmod(P(Q, {0, 0, 0, 1}), P(Q, {0, 1}));
  CHECK(q == P(Q, {0, 0, 1}));
  CHECK(r.is_zero());
  // x = -2 is a root of x^2 + 1 in F_5.
  Poly a = P(F5, {1, 0, 1});
  CHECK(a.eval(Scalar(F5, -2)).is_zero());
  CHECK(gcd(a, P(F5, {2, 1})) == P(F5, {2, 1}));
  CHECK_THROWS_AS(Poly::divmod(a, Poly(F5)), DivisionByZero);
}

TEST_CASE("rational coefficients stay normalized") {
  Poly a = Poly(Q, {Scalar::parse(Q, "1/3"), Scalar::parse(Q, "2/6")});
  Poly b = Scalar::parse(Q, "3") * a;
  CHECK(b == P(Q, {1, 1}));
  CHECK(b.coeff(0).to_string() == "1");
}

TEST_CASE("xgcd identity") {
  std::mt19937_64 rng(11);
  for (FieldSpec f : {Q, F5, FieldSpec::prime(2)}) {
    for (int it = 0; it < 40; ++it) {
      Poly a = random_poly(rng, f, 5), b = random_poly(rng, f, 4);
      XGcd g = xgcd(a, b);
      CHECK(g.g == g.s * a + g.t * b);
      CHECK(g.g == gcd(a, b));
      if (!g.g.is_zero()) {
        CHECK(g.g.divides(a));
        CHECK(g.g.divides(b));
      }
    }
  }
}

TEST_CASE("smith normal form examples") {
  SmithForm id = smith_normal_form(PolyMatrix::identity(Q, 3));
  CHECK(id.D == PolyMatrix::identity(Q, 3));
  CHECK(id.invariant_factors.size() == 3);

  SmithForm z = smith_normal_form(PolyMatrix(Q, 2, 3));
  CHECK(z.D.is_zero());
  CHECK(z.invariant_factors.empty());

  PolyMatrix a = PolyMatrix::from_ints(Q, {{{0, 1}, {0, 0, 1}}, {{}, {0, 0, 0, 1}}});
  // Oracle: d1 = gcd of entries, d1*d2 = det.
  auto dd = determinantal_divisors(a);
  REQUIRE(dd.size() == 2);
  CHECK(dd[0] == P(Q, {0, 1}));
  CHECK(dd[1] == P(Q, {0, 0, 0, 0, 1}));
  SmithForm s = smith_normal_form(a);
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == P(Q, {0, 1}));
  CHECK(s.invariant_factors[1] == P(Q, {0, 0, 0, 1}));
  CHECK(s.U * a * s.V == s.D);
}

TEST_CASE("smith normal form properties") {
  std::mt19937_64 rng(2024);
  for (FieldSpec f : {Q, F5, FieldSpec::prime(101)}) {
    for (int it = 0; it < 60; ++it) {
      std::uniform_int_distribution<int> dim(0, 3);
      int r = dim(rng), c = dim(rng);
      PolyMatrix A = random_matrix(rng, f, r, c, 2);
      SmithForm s = smith_normal_form(A, {true, true});
      CHECK(s.U * A * s.V == s.D);
      CHECK(is_diagonal(s.D));
      CHECK(s.U * s.U_inv == PolyMatrix::identity(f, r));
      CHECK(s.V * s.V_inv == PolyMatrix::identity(f, c));
      CHECK(det(s.U).is_unit());
      CHECK(det(s.V).is_unit());
      for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
        CHECK(s.invariant_factors[i].is_monic());
        if (i + 1 < s.invariant_factors.size())
          CHECK(s.invariant_factors[i].divides(s.invariant_factors[i + 1]));
      }
      // Products of invariant factors equal the determinantal divisors.
      auto dd = determinantal_divisors(A);
      CHECK(dd.size() == s.invariant_factors.size());
      Poly prod = Poly::constant(f, 1);
      for (std::size_t i = 0; i < dd.size(); ++i) {
        prod = prod * s.invariant_factors[i];
        CHECK(prod == dd[i]);
      }
      CHECK(invariant_factors(A) == s.invariant_factors);
    }
  }
}

TEST_CASE("solve_linear examples") {
  PolyMatrix A = PolyMatrix::from_ints(Q, {{{0, 1}}});
  auto s = solve_linear(A, PolyMatrix::from_ints(Q, {{{0, 0, 1}}}));
  REQUIRE(s);
  CHECK(s->particular == PolyMatrix::from_ints(Q, {{{0, 1}}}));
  CHECK(s->homogeneous.cols() == 0);
  CHECK_FALSE(solve_linear(A, PolyMatrix::from_ints(Q, {{{1}}})));

  PolyMatrix B = PolyMatrix::from_ints(Q, {{{0, 1}, {0, 0, 1}}});
  auto t = solve_linear(B, PolyMatrix::from_ints(Q, {{{0, 0, 0, 1}}}));
  REQUIRE(t);
  CHECK(t->homogeneous.cols() == 1);
  CHECK(B * t->homogeneous == PolyMatrix(Q, 1, 1));
  CHECK_THROWS_AS(solve_linear(B, PolyMatrix(Q, 2, 1)), DimensionMismatch);
}

TEST_CASE("solve_linear soundness and completeness") {
  std::mt19937_64 rng(77);
  // Sound on planted systems over both fields.
  for (FieldSpec f : {Q, F5}) {
    for (int it = 0; it < 40; ++it) {
      PolyMatrix A = random_matrix(rng, f, 2, 3, 2);
      PolyMatrix x0 = random_matrix(rng, f, 3, 1, 2);
      PolyMatrix b = A * x0;
      auto s = solve_linear(A, b);
      REQUIRE(s);
      CHECK(A * s->particular == b);
      CHECK((A * s->homogeneous).is_zero());
    }
  }
  // Complete against exhaustive search over F_2 with bounded degrees.
  const FieldSpec F2 = FieldSpec::prime(2);
  auto all_polys = [&](int max_deg) {
    std::vector<Poly> out;
    for (int mask = 0; mask < (1 << (max_deg + 1)); ++mask) {
      std::vector<long> c;
      for (int i = 0; i <= max_deg; ++i) c.push_back((mask >> i) & 1);
      out.push_back(Poly::from_ints(F2, c));
    }
    return out;
  };
  for (int it = 0; it < 40; ++it) {
    PolyMatrix A = random_matrix(rng, F2, 1, 2, 2);
    PolyMatrix b = random_matrix(rng, F2, 1, 1, 3);
    int bound = std::max(0, b.max_degree()) + std::max(0, A(0, 0).degree()) + std::max(0, A(0, 1).degree());
    bound = std::min(bound, 4);
    bool found = false;
    auto cands = all_polys(bound);
    for (auto& u : cands) {
      for (auto& v : cands)
        if (A(0, 0) * u + A(0, 1) * v == b(0, 0)) {
          found = true;
          break;
        }
      if (found) break;
    }
    auto s = solve_linear(A, b);
    if (found) CHECK(s.has_value());
    if (s) CHECK(A * s->particular == b);
  }
}

TEST_CASE("kernel_basis examples and properties") {
  PolyMatrix A = PolyMatrix::from_ints(Q, {{{0, 1}, {-1}}});
  PolyMatrix K = kernel_basis(A);
  REQUIRE(K.cols() == 1);
  CHECK((A * K).is_zero());
  // The kernel is spanned by (1, x)^T; any basis is a unit multiple of it.
  CHECK(K(0, 0).is_unit());
  CHECK(K(1, 0) == K(0, 0).coeffs()[0] * P(Q, {0, 1}));

  CHECK(kernel_basis(PolyMatrix::from_ints(Q, {{{1}, {1}}, {{0}, {2}}})).cols() == 0);
  PolyMatrix inj = PolyMatrix::from_ints(Q, {{{0, 1}}, {{0, 0, 1}}});
  CHECK(kernel_basis(inj).cols() == 0);
  auto s = solve_linear(inj, PolyMatrix(Q, 2, 1));
  REQUIRE(s);
  CHECK(s->particular.is_zero());

  std::mt19937_64 rng(5);
  for (FieldSpec f : {Q, F5}) {
    for (int it = 0; it < 40; ++it) {
      PolyMatrix M = random_matrix(rng, f, 2, 4, 2);
      PolyMatrix KB = kernel_basis(M);
      CHECK((M * KB).is_zero());
      CHECK(KB.cols() == M.cols() - rank(M));
      // Saturated: the basis extends to a unimodular matrix, so its factors are units.
      for (auto& d : invariant_factors(KB)) CHECK(d.is_unit());
    }
  }
}

TEST_CASE("finitely presented modules") {
  FPModule R = FPModule::free(Q, 1);
  PolyMatrix x = PolyMatrix::from_ints(Q, {{{0, 1}}});
  FPModule c = fp_cokernel(x, R, R);
  REQUIRE(c.torsion_factors().size() == 1);
  CHECK(c.torsion_factors()[0] == P(Q, {0, 1}));
  CHECK(c.k_dimension() == 1);

  FPModule M = FPModule::cyclic(P(Q, {0, 0, 1}));
  CHECK(fp_kernel(PolyMatrix::identity(Q, 1), M, M).module.is_zero());
  CHECK(direct_sum(M, FPModule::cyclic(P(Q, {0, 1}))).k_dimension() == 3);
  CHECK_FALSE(R.k_dimension().has_value());

  // x: R/(x) -> R/(x^2) is well-defined, 1: R/(x) -> R/(x^2) is not.
  FPModule Rx = FPModule::cyclic(P(Q, {0, 1}));
  CHECK(respects_relations(x, Rx, M));
  CHECK_THROWS_AS(fp_kernel(PolyMatrix::identity(Q, 1), Rx, M), IllDefinedMap);
  CHECK(fp_kernel(x, Rx, M).module.k_dimension() == 0);
  CHECK(fp_cokernel(x, Rx, M).k_dimension() == 1);
  // x: R/(x^2) -> R/(x^2) has kernel and cokernel of dimension 1.
  CHECK(fp_kernel(x, M, M).module.k_dimension() == 1);
  CHECK(fp_cokernel(x, M, M).k_dimension() == 1);

  std::mt19937_64 rng(9);
  for (FieldSpec f : {Q, F5}) {
    for (int it = 0; it < 30; ++it) {
      FPModule A(random_matrix(rng, f, 3, 2, 2));
      FPModule n1 = A.normalized();
      CHECK(n1.same_normal_form(A));
      CHECK(n1.normalized().presentation() == n1.presentation());
    }
  }
}
