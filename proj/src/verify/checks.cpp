#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

#include "cdgmf/errors.hpp"
#include "cdgmf/generators.hpp"
#include "cdgmf/oracle.hpp"
#include "cdgmf/verify.hpp"

namespace cdgmf {

namespace {

void set_pass(CheckReport& r) { r.pass = r.recompute_pass(); }

void keep_witness(CheckReport& r, const std::string& name, const HomotopyWitness& h) {
  r.witnesses.emplace_back(name + ".h0", h.h0);
  r.witnesses.emplace_back(name + ".h1", h.h1);
}

// One sub-claim of a structural check.
void tally(CheckReport& r, bool ok, const std::string& what) {
  ++r.right;
  if (ok) {
    ++r.left;
  } else {
    r.notes.push_back("failed: " + what);
  }
}

void record_dims(const CohomologyPair& c, long& value, bool& finite) {
  finite = c.finite;
  value = c.finite ? c.dim0 : c.H0.free_rank();
}

}  // namespace

bool CheckReport::recompute_pass() const {
  if (left_finite != right_finite || left != right) return false;
  return !oracle || *oracle == left;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["digest"] = r.digest;
  j["left"] = r.left;
  j["right"] = r.right;
  j["left_finite"] = r.left_finite;
  j["right_finite"] = r.right_finite;
  j["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  Json w = Json::array();
  for (const auto& [name, m] : r.witnesses) {
    Json e = to_json_sized(m);
    e["name"] = name;
    w.push_back(std::move(e));
  }
  j["witnesses"] = std::move(w);
  return j;
}

std::string instance_digest(const Json& inputs, std::uint64_t seed) {
  std::string text = serialize(Json{{"inputs", inputs}, {"seed", seed}});
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalAssertionFailure("digest computation failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

// ---- pairing and duality ----------------------------------------------------------

CheckReport check_pairing(const FPCDGModule& N, const MatrixFactorization& F) {
  CheckReport r;
  r.check = "pairing";
  r.digest = instance_digest(Json::array({instance(N), instance(F)}));
  XiResult x = xi(N);
  record_dims(cohomology(hom_complex(x.xi, F)), r.left, r.left_finite);
  record_dims(cohomology(tensor_complex(N, FPCDGModule::from_mf(F))), r.right, r.right_finite);
  set_pass(r);
  return r;
}

std::optional<long> duality_oracle_value(const FPCDGModule& N, const FPCDGModule& K) {
  const Poly& w = N.ring.w;
  const int n = w.degree();
  if (n < 2 || !(w == Poly::x_pow(w.field(), n))) return std::nullopt;
  // Exponents of the nonzero stable summands; R/x^0 and R/x^n vanish stably.
  auto exponents = [&](const FPCDGModule& M) -> std::optional<std::vector<int>> {
    if (!M.d0.is_zero() || !M.d1.is_zero()) return std::nullopt;
    std::vector<int> e;
    for (int p = 0; p < 2; ++p) {
      const FPModule& c = M.comp(p);
      if (c.generators() == 0) continue;
      if (c.generators() != 1 || c.relations() != 1) return std::nullopt;
      const Poly& rel = c.presentation()(0, 0);
      const int a = rel.degree();
      if (a < 0 || !(rel == Poly::x_pow(w.field(), a))) return std::nullopt;
      if (a > 0 && a < n) e.push_back(a);
    }
    return e;
  };
  auto en = exponents(N), ek = exponents(K);
  if (!en || !ek) return std::nullopt;
  // Parity-changing summands pair through M[1] = k[x]/x^(n-a), which has the same stable Homs.
  long total = 0;
  for (int a : *en)
    for (int b : *ek) total += stable_hom_oracle(a, b, n, w.field());
  return total;
}

CheckReport check_duality(const FPCDGModule& N, const FPCDGModule& K, bool cross_check) {
  CheckReport r;
  r.check = "duality";
  r.digest = instance_digest(Json::array({instance(N), instance(K)}));
  XiResult xn = xi(N), xk = xi(K);
  record_dims(cohomology(hom_complex(xn.xi, xk.xi)), r.left, r.left_finite);
  record_dims(cohomology(tensor_complex(N, FPCDGModule::from_mf(xk.xi))), r.right, r.right_finite);
  if (cross_check) r.oracle = duality_oracle_value(N, K);
  set_pass(r);
  return r;
}

// ---- totalization lemmas ----------------------------------------------------------

namespace {

// Random w = 0 two-periodic complex of free modules.
MatrixFactorization random_ring_complex(InstanceGenerator& gen, const CDGRingSpec& ring) {
  FieldSpec f = ring.field;
  const int r0 = gen.uniform(1, 2), r1 = gen.uniform(1, 2);
  PolyMatrix d0(f, r1, r0);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r0; ++j) d0(i, j) = gen.poly(f, 2);
  return MatrixFactorization(ring, Side::left, d0, PolyMatrix(f, r0, r1));
}

// Exact Koszul complex of a unimodular row, ascending, tensored with X.
CDGComplex koszul_tensor(InstanceGenerator& gen, const MatrixFactorization& X) {
  FieldSpec f = X.field();
  const bool three = gen.uniform(0, 1) == 1;
  Poly a = gen.poly(f, 2), b = gen.poly(f, 2);
  if (a.is_zero()) a = Poly::x_pow(f, 1);
  std::vector<PolyMatrix> K;
  if (!three) {
    // (a, b) with b = a s + 1: 0 -> R -(-b, a)-> R^2 -(a, b)-> R -> 0.
    b = a * b + Poly::constant(f, 1);
    K.push_back(vstack(PolyMatrix::scalar(-b, 1), PolyMatrix::scalar(a, 1)));
    K.push_back(hstack(PolyMatrix::scalar(a, 1), PolyMatrix::scalar(b, 1)));
  } else {
    Poly c = a * gen.poly(f, 1) + b * gen.poly(f, 1) + Poly::constant(f, 1);
    PolyMatrix m0(f, 3, 1), m1(f, 3, 3), m2(f, 1, 3);
    m0(0, 0) = c;
    m0(1, 0) = -b;
    m0(2, 0) = a;
    m1(0, 0) = -b;
    m1(0, 1) = -c;
    m1(1, 0) = a;
    m1(1, 2) = -c;
    m1(2, 1) = a;
    m1(2, 2) = b;
    m2(0, 0) = a;
    m2(0, 1) = b;
    m2(0, 2) = c;
    K = {m0, m1, m2};
  }
  CDGComplex C;
  C.start = gen.uniform(-1, 1);
  auto power = [&](int k) {
    MatrixFactorization S = MatrixFactorization::zero(X.ring, X.side);
    for (int i = 0; i < k; ++i) S = direct_sum(S, X);
    return S;
  };
  C.terms.push_back(power(K[0].cols()));
  for (const PolyMatrix& k : K) {
    MatrixFactorization T = power(k.rows());
    C.maps.push_back({C.terms.back(), T, kron(k, PolyMatrix::identity(f, X.rank0)),
                      kron(k, PolyMatrix::identity(f, X.rank1))});
    C.terms.push_back(T);
  }
  return C;
}

}  // namespace

CheckReport check_totalization_lemmas(std::uint64_t seed, int split_count, int bicomplex_count) {
  CheckReport r;
  r.check = "totalization";
  r.digest = instance_digest(Json{{"split_count", split_count}, {"bicomplex_count", bicomplex_count}}, seed);
  InstanceGenerator gen(seed);
  for (int i = 0; i < split_count; ++i) {
    FieldSpec f = gen.field();
    CDGRingSpec ring = gen.ring(f, 1, 6);
    Side side = gen.uniform(0, 1) ? Side::left : Side::right;
    MatrixFactorization X = gen.mf(ring, side, 0, 2), Y = gen.mf(ring, side, 0, 2);
    CDGComplex C;
    C.start = gen.uniform(-1, 1);
    if (i % 3 == 2) {
      // 0 -> X -> X + Y -> Y -> 0.
      MatrixFactorization S = direct_sum(X, Y);
      PolyMatrix i0 = vstack(PolyMatrix::identity(f, X.rank0), PolyMatrix(f, Y.rank0, X.rank0));
      PolyMatrix i1 = vstack(PolyMatrix::identity(f, X.rank1), PolyMatrix(f, Y.rank1, X.rank1));
      PolyMatrix p0 = hstack(PolyMatrix(f, Y.rank0, X.rank0), PolyMatrix::identity(f, Y.rank0));
      PolyMatrix p1 = hstack(PolyMatrix(f, Y.rank1, X.rank1), PolyMatrix::identity(f, Y.rank1));
      C.terms = {X, S, Y};
      C.maps = {MFMorphism{X, S, i0, i1}, MFMorphism{S, Y, p0, p1}};
    } else {
      // 0 -> Y -> cone(g) -> X[1] -> 0, split as graded modules only.
      auto c = cone(gen.closed_morphism(X, Y));
      C.terms = {Y, c.cone, shift(X, 1)};
      C.maps = {c.incl, c.proj};
    }
    MatrixFactorization T = totalize(C);
    Contractibility ct = is_contractible(T);
    bool ok = ct.contractible && check_witness(identity(T), zero_morphism(T, T), *ct.witness);
    tally(r, ok, "split complex " + std::to_string(i) + " has a contractible totalization");
    if (ok) keep_witness(r, "split" + std::to_string(i), *ct.witness);
  }
  for (int i = 0; i < bicomplex_count; ++i) {
    FieldSpec f = gen.field();
    CDGRingSpec ring(f, Poly(f));
    CDGComplex C = koszul_tensor(gen, random_ring_complex(gen, ring));
    MatrixFactorization T = totalize(C);
    CohomologyPair h = cohomology(PeriodicComplex{FPModule::free(f, T.rank0), FPModule::free(f, T.rank1), T.d0, T.d1});
    tally(r, h.H0.is_zero() && h.H1.is_zero(), "bicomplex " + std::to_string(i) + " has an acyclic totalization");
  }
  set_pass(r);
  return r;
}

// ---- adjunction isomorphisms ------------------------------------------------------

namespace {

struct BlockMove {
  int src_off, dst_off, rows, cols;  // source block is rows x cols, indexed (i, j) -> i * cols + j
  bool transpose;                    // target index j * rows + i instead
  int sign;
};

PolyMatrix signed_permutation(FieldSpec f, int dim, const std::vector<BlockMove>& moves) {
  PolyMatrix m(f, dim, dim);
  for (const BlockMove& b : moves)
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) {
        const int s = b.src_off + i * b.cols + j;
        const int t = b.dst_off + (b.transpose ? j * b.rows + i : i * b.cols + j);
        m(t, s) = Poly::constant(f, b.sign);
      }
  return m;
}

bool certify(const ChainIso& phi, const PeriodicComplex& from, const PeriodicComplex& to, CheckReport& r,
             const std::string& name) {
  FieldSpec f = phi.m0.field();
  bool all = true;
  auto one = [&](bool ok, const std::string& what) {
    tally(r, ok, name + ": " + what);
    all = all && ok;
  };
  one(to.e0 * phi.m0 == phi.m1 * from.e0, "commutes with d in degree 0");
  one(to.e1 * phi.m1 == phi.m0 * from.e1, "commutes with d in degree 1");
  // Signed permutations: the inverse is the transpose, checked on both sides.
  for (int d = 0; d < 2; ++d) {
    const PolyMatrix& m = d == 0 ? phi.m0 : phi.m1;
    PolyMatrix inv = m.transpose();
    one(m * inv == PolyMatrix::identity(f, m.rows()) && inv * m == PolyMatrix::identity(f, m.cols()),
        "exact inverse in degree " + std::to_string(d));
  }
  return all;
}

}  // namespace

ChainIso tensor_to_hom_dual(const MatrixFactorization& P, const MatrixFactorization& G) {
  // y_i (x) x_j in P_a (x) G_(a+d) goes to x_j y_i^T in Hom(P_a^v, G_(a+d)).
  FieldSpec f = P.field();
  ChainIso c;
  for (int d = 0; d < 2; ++d) {
    std::vector<BlockMove> moves;
    int off = 0;
    for (int a = 0; a < 2; ++a) {
      const int sign = (d == 1 && a == 1) ? -1 : 1;
      moves.push_back({off, off, P.rank(a), G.rank(a + d), true, sign});
      off += P.rank(a) * G.rank(a + d);
    }
    (d == 0 ? c.m0 : c.m1) = signed_permutation(f, off, moves);
  }
  return c;
}

ChainIso tensor_dual_to_hom(const MatrixFactorization& Gr, const MatrixFactorization& E) {
  // x_i (x) phi_j in Gr_a (x) E^v_(a+d) goes to x_i phi_j^T in Hom(E_(a+d), Gr_a).
  FieldSpec f = Gr.field();
  ChainIso c;
  for (int d = 0; d < 2; ++d) {
    // Hom blocks are ordered by the parity b of E; the tensor block a = b + d.
    int hom_off[2];
    int o = 0;
    for (int b = 0; b < 2; ++b) {
      hom_off[b] = o;
      o += Gr.rank(b + d) * E.rank(b);
    }
    std::vector<BlockMove> moves;
    int off = 0;
    for (int a = 0; a < 2; ++a) {
      const int b = (a + d) % 2;
      moves.push_back({off, hom_off[b], Gr.rank(a), E.rank(b), false, 1});
      off += Gr.rank(a) * E.rank(b);
    }
    (d == 0 ? c.m0 : c.m1) = signed_permutation(f, off, moves);
  }
  return c;
}

CheckReport check_adjunction_isos(const MatrixFactorization& P, const MatrixFactorization& G,
                                  const MatrixFactorization& E, const MatrixFactorization& Gr) {
  CheckReport r;
  r.check = "adjunction";
  r.digest = instance_digest(Json::array({instance(P), instance(G), instance(E), instance(Gr)}));
  ChainIso phi = tensor_to_hom_dual(P, G);
  if (certify(phi, tensor_complex(P, G), hom_complex(dualize(P), G), r, "P (x) G -> Hom(P^v, G)")) {
    r.witnesses.emplace_back("phi0", phi.m0);
    r.witnesses.emplace_back("phi1", phi.m1);
  }
  ChainIso psi = tensor_dual_to_hom(Gr, E);
  if (certify(psi, tensor_complex(Gr, dualize(E)), hom_complex(E, Gr), r, "Gr (x) E^v -> Hom(E, Gr)")) {
    r.witnesses.emplace_back("psi0", psi.m0);
    r.witnesses.emplace_back("psi1", psi.m1);
  }
  set_pass(r);
  return r;
}

// ---- Xi triangulatedness ----------------------------------------------------------

namespace {

bool homotopic_into(CheckReport& r, const MFMorphism& a, const MFMorphism& b, const std::string& name) {
  auto h = homotopy_witness(a, b);
  bool ok = h && check_witness(a, b, *h);
  tally(r, ok, name);
  if (ok) keep_witness(r, name, *h);
  return ok;
}

bool equivalence_into(CheckReport& r, const MFMorphism& m, const std::string& name) {
  auto e = is_homotopy_equivalence(m);
  bool ok = e && check_witness(compose(e->inverse, m), identity(m.source), e->source_witness) &&
            check_witness(compose(m, e->inverse), identity(m.target), e->target_witness);
  tally(r, ok, name);
  if (ok) {
    keep_witness(r, name + ".source", e->source_witness);
    keep_witness(r, name + ".target", e->target_witness);
  }
  return ok;
}

BlockLayout swapped(const BlockLayout& l) { return {l[1], l[0]}; }

BlockLayout concat(const std::vector<Block>& a0, const std::vector<Block>& b0, const std::vector<Block>& a1,
                   const std::vector<Block>& b1) {
  BlockLayout l;
  l[0] = a0;
  l[0].insert(l[0].end(), b0.begin(), b0.end());
  l[1] = a1;
  l[1].insert(l[1].end(), b1.begin(), b1.end());
  return l;
}

// Same module with a redundant generator in component 0, killed by a unit relation.
FPMorphism redundant_presentation(const FPCDGModule& N) {
  FieldSpec f = N.field();
  const int g0 = N.generators(0), g1 = N.generators(1);
  PolyMatrix unit(f, 1, 1);
  unit(0, 0) = Poly::constant(f, 1);
  FPModule c0(block_diag(N.comp0.presentation(), unit));
  PolyMatrix d0 = hstack(N.d0, PolyMatrix(f, g1, 1));
  PolyMatrix d1 = vstack(N.d1, PolyMatrix(f, 1, g1));
  FPCDGModule A(N.ring, N.side, c0, N.comp1, d0, d1);
  return {N, A, vstack(PolyMatrix::identity(f, g0), PolyMatrix(f, 1, g0)), PolyMatrix::identity(f, g1)};
}

}  // namespace

CheckReport check_xi_triangulated(const FPMorphism& f, const FPMorphism& g) {
  CheckReport r;
  r.check = "xi_triangulated";
  r.digest = instance_digest(Json::array({instance(f), instance(g)}));
  const FPCDGModule& N = f.source;
  const FPCDGModule& N1 = f.target;
  XiResult xn = xi(N), xn1 = xi(N1), xn2 = xi(g.target);

  homotopic_into(r, xi_on_morphism(identity(N), xn, xn), identity(xn.xi), "xi(id) ~ id");
  homotopic_into(r, xi_on_morphism(zero_morphism(N, N1), xn, xn1), zero_morphism(xn1.xi, xn.xi), "xi(0) ~ 0");
  homotopic_into(r, xi_on_morphism(compose(g, f), xn, xn2),
                 compose(xi_on_morphism(f, xn, xn1), xi_on_morphism(g, xn1, xn2)), "xi(g f) ~ xi(f) xi(g)");

  // xi(N[1]) -> xi(shifted resolution of N) -> xi(N)[-1].
  {
    FPCDGModule S = shift(N, 1);
    XiResult xs = xi(S);
    Resolution rb = shift(xn.resolution);
    XiResult xb = xi(rb);
    MFMorphism comp = xi_on_lift(lift(identity(S), xs.resolution, rb), xs, xb);
    BlockLayout l = swapped(xi_layout(xn, ""));
    MatrixFactorization target = shift(xn.xi, -1);
    auto sigma = find_signed_block_iso(xb.xi, l, target, l);
    tally(r, sigma.has_value(), "sign isomorphism xi(N[1] resolution) -> xi(N)[-1]");
    if (sigma) {
      r.witnesses.emplace_back("shift.sigma0", sigma->f0);
      r.witnesses.emplace_back("shift.sigma1", sigma->f1);
      equivalence_into(r, compose(*sigma, comp), "xi(N[1]) ~ xi(N)[-1]");
    }
  }

  // xi(cone f) against the cocone of xi(f), through the cone of the lifted resolutions.
  {
    ResolutionLift a = lift(f, xn.resolution, xn1.resolution);
    Resolution rc = cone_resolution(f, xn.resolution, xn1.resolution, a);
    XiResult xrc = xi(rc);
    FPCDGModule C = rc.target;
    XiResult xc = xi(C);
    MFMorphism comp = xi_on_lift(lift(identity(C), xc.resolution, rc), xc, xrc);  // xi(rc) -> xi(C)
    MFMorphism xf = xi_on_lift(a, xn, xn1);                                          // xi(N') -> xi(N)
    MatrixFactorization cocone = shift(cone(xf).cone, 1);
    BlockLayout ls = xi_layout(xn, "s."), lt = xi_layout(xn1, "t.");
    // xi(rc)_p = t.Q0_p + s.Q0_(p+1) + t.Q1_(p+1) + s.Q1_p; cocone_p = xi(N)_(p+1) + xi(N')_p.
    BlockLayout lrc;
    for (int p = 0; p < 2; ++p) {
      const auto& t = lt[static_cast<std::size_t>(p)];
      const auto& s = ls[static_cast<std::size_t>(1 - p)];
      lrc[static_cast<std::size_t>(p)] = {t[0], s[0], t[1], s[1]};
    }
    BlockLayout lco = concat(ls[1], lt[0], ls[0], lt[1]);
    auto sigma = find_signed_block_iso(cocone, lco, xrc.xi, lrc);
    tally(r, sigma.has_value(), "sign isomorphism cocone(xi f) -> xi(cone resolution)");
    if (sigma) {
      r.witnesses.emplace_back("cone.sigma0", sigma->f0);
      r.witnesses.emplace_back("cone.sigma1", sigma->f1);
      equivalence_into(r, compose(comp, *sigma), "cocone(xi f) ~ xi(cone f)");
    }
  }

  // A second presentation of N gives an equivalent xi.
  {
    FPMorphism phi = redundant_presentation(N);
    XiResult xa = xi(phi.target);
    equivalence_into(r, xi_on_morphism(phi, xn, xa), "xi independent of the presentation");
  }
  set_pass(r);
  return r;
}

// ---- selftest ---------------------------------------------------------------------

std::vector<CheckReport> run_selftest(const SelftestOptions& o) {
  std::vector<std::string> names = o.checks.empty() ? kSelftestChecks : o.checks;
  for (const auto& n : names)
    if (std::find(kSelftestChecks.begin(), kSelftestChecks.end(), n) == kSelftestChecks.end())
      throw ParseError("unknown check \"" + n + "\"");
  std::vector<CheckReport> out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    const std::string& name = names[k];
    InstanceGenerator gen(o.seed * 1000003ULL + k);
    if (name == "totalization") {
      out.push_back(check_totalization_lemmas(o.seed, o.count, o.count));
      out.back().digest = instance_digest(Json{{"check", name}, {"count", o.count}}, o.seed);
      continue;
    }
    for (int i = 0; i < o.count; ++i) {
      FieldSpec f = gen.field();
      if (name == "pairing") {
        CDGRingSpec R = gen.ring(f, 1, 6);
        out.push_back(check_pairing(gen.fpcdg(R, Side::right, 2), gen.mf(R, Side::left, 1, 2)));
      } else if (name == "duality") {
        CDGRingSpec R = gen.ring(f, 2, 5);
        if (i < 10) {
          // Oracle-comparable shapes first.
          const int n = R.w.degree();
          FPCDGModule N = InstanceGenerator::cyclic_pair(R, Side::right, gen.uniform(0, n), gen.uniform(0, n));
          FPCDGModule K = InstanceGenerator::cyclic_pair(R, Side::right, gen.uniform(0, n), gen.uniform(0, n));
          out.push_back(check_duality(N, K, true));
        } else {
          out.push_back(check_duality(gen.fpcdg(R, Side::right, 1), gen.fpcdg(R, Side::right, 1), false));
        }
      } else if (name == "adjunction") {
        CDGRingSpec R = gen.ring(f, 1, 6);
        out.push_back(check_adjunction_isos(gen.mf(R, Side::right, 0, 3), gen.mf(R, Side::left, 0, 3),
                                           gen.mf(R, Side::right, 0, 3), gen.mf(R, Side::right, 0, 3)));
      } else if (name == "xi_triangulated") {
        CDGRingSpec R = gen.ring(f, 1, 4);
        FPCDGModule A = gen.fpcdg(R, Side::right, 1), B = gen.fpcdg(R, Side::right, 1),
                    C = gen.fpcdg(R, Side::right, 1);
        out.push_back(check_xi_triangulated(gen.fp_closed_morphism(A, B), gen.fp_closed_morphism(B, C)));
      }
    }
  }
  return out;
}

Json selftest_summary(const SelftestOptions& o, const std::vector<CheckReport>& reports) {
  Json checks = Json::object();
  bool ok = true;
  for (const auto& r : reports) {
    Json& e = checks[r.check];
    if (e.is_null()) e = Json{{"passed", 0}, {"total", 0}};
    e["total"] = e["total"].get<long>() + 1;
    if (r.pass) e["passed"] = e["passed"].get<long>() + 1;
    ok = ok && r.pass;
  }
  return Json{{"seed", o.seed}, {"count", o.count}, {"checks", checks}, {"pass", ok}};
}

PeriodicComplex hom_complex(const Instance& source, const Instance& target) {
  MatrixFactorization M = as_mf(target);
  if (auto* m = std::get_if<MatrixFactorization>(&source.value)) return hom_complex(*m, M);
  FPCDGModule L = as_fpcdg(source);
  if (L.has_free_components()) return hom_complex(as_mf(source), M);
  return hom_complex(L, M);
}

Json validation_report(const Instance& in) {
  Json j{{"kind", in.kind}, {"valid", true}, {"composite", nullptr}, {"error", nullptr}};
  try {
    std::visit(
        [](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, MatrixFactorization> || std::is_same_v<T, FPCDGModule>) {
            validate(v);
          } else if constexpr (std::is_same_v<T, CDGComplex>) {
            for (const auto& t : v.terms) validate(t);
            totalize(v);
          } else {
            validate(v.source);
            validate(v.target);
            check_closed(v);
          }
        },
        in.value);
  } catch (const CurvatureMismatch& e) {
    j["valid"] = false;
    j["composite"] = e.composite();
    j["error"] = e.what();
  } catch (const InternalAssertionFailure&) {
    throw;
  } catch (const Error& e) {
    j["valid"] = false;
    j["error"] = e.what();
  }
  return j;
}

}  // namespace cdgmf
