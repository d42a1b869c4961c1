#include "cdgmf/cdg.hpp"

#include "cdgmf/errors.hpp"

namespace cdgmf {

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

CDGRingSpec::CDGRingSpec(FieldSpec f, Poly potential) : field(f), w(std::move(potential)) {
  if (!w.is_zero() && w.field() != f) throw RingMismatch("potential over another field");
  if (w.is_zero()) w = Poly(f);
}

Poly CDGRingSpec::curvature(Side side) const { return side == Side::left ? w : -w; }

MatrixFactorization::MatrixFactorization(CDGRingSpec r, Side s, PolyMatrix d0_, PolyMatrix d1_)
    : ring(std::move(r)), side(s), rank0(d0_.cols()), rank1(d0_.rows()), d0(std::move(d0_)), d1(std::move(d1_)) {
  if (d1.rows() != rank0 || d1.cols() != rank1)
    throw DimensionMismatch("d1 must be rank0 x rank1");
}

MatrixFactorization MatrixFactorization::zero(const CDGRingSpec& r, Side s) {
  return MatrixFactorization(r, s, PolyMatrix(r.field, 0, 0), PolyMatrix(r.field, 0, 0));
}

bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
  return a.ring == b.ring && a.side == b.side && a.d0 == b.d0 && a.d1 == b.d1;
}

FPCDGModule::FPCDGModule(CDGRingSpec r, Side s, FPModule c0, FPModule c1, PolyMatrix d0_, PolyMatrix d1_)
    : ring(std::move(r)), side(s), comp0(std::move(c0)), comp1(std::move(c1)), d0(std::move(d0_)), d1(std::move(d1_)) {
  if (d0.rows() != comp1.generators() || d0.cols() != comp0.generators())
    throw DimensionMismatch("d0 must map generators of comp0 to comp1");
  if (d1.rows() != comp0.generators() || d1.cols() != comp1.generators())
    throw DimensionMismatch("d1 must map generators of comp1 to comp0");
}

FPCDGModule FPCDGModule::from_mf(const MatrixFactorization& m) {
  return FPCDGModule(m.ring, m.side, FPModule::free(m.field(), m.rank0), FPModule::free(m.field(), m.rank1), m.d0,
                     m.d1);
}

bool FPCDGModule::has_free_components() const {
  return comp0.has_free_presentation() && comp1.has_free_presentation();
}

MatrixFactorization FPCDGModule::to_mf() const {
  if (!has_free_components()) throw DimensionMismatch("module has relations; not graded-free");
  return MatrixFactorization(ring, side, d0, d1);
}

bool operator==(const FPCDGModule& a, const FPCDGModule& b) {
  return a.ring == b.ring && a.side == b.side && a.comp0.presentation() == b.comp0.presentation() &&
         a.comp1.presentation() == b.comp1.presentation() && a.d0 == b.d0 && a.d1 == b.d1;
}

// ---- validation --------------------------------------------------------------

void validate(const MatrixFactorization& m) {
  if (!m.ring.w.is_zero() && m.ring.w.field() != m.field()) throw RingMismatch("potential over another field");
  if (m.d0.rows() != m.rank1 || m.d0.cols() != m.rank0 || m.d1.rows() != m.rank0 || m.d1.cols() != m.rank1)
    throw DimensionMismatch("differential shapes do not match ranks");
  const Poly c = m.ring.curvature(m.side);
  PolyMatrix a = m.d1 * m.d0, b = m.d0 * m.d1;
  if (a != PolyMatrix::scalar(c, m.rank0))
    throw CurvatureMismatch("d1*d0", a.to_string() + " != (" + c.to_string() + ")*I");
  if (b != PolyMatrix::scalar(c, m.rank1))
    throw CurvatureMismatch("d0*d1", b.to_string() + " != (" + c.to_string() + ")*I");
}

void validate(const FPCDGModule& m) {
  if (!respects_relations(m.d0, m.comp0, m.comp1)) throw IllDefinedMap("d0 does not respect relations");
  if (!respects_relations(m.d1, m.comp1, m.comp0)) throw IllDefinedMap("d1 does not respect relations");
  const Poly c = m.ring.curvature(m.side);
  PolyMatrix a = m.d1 * m.d0 - PolyMatrix::scalar(c, m.generators(0));
  if (!m.comp0.contains_in_relations(a))
    throw CurvatureMismatch("d1*d0", (m.d1 * m.d0).to_string() + " != (" + c.to_string() + ")*I modulo relations");
  PolyMatrix b = m.d0 * m.d1 - PolyMatrix::scalar(c, m.generators(1));
  if (!m.comp1.contains_in_relations(b))
    throw CurvatureMismatch("d0*d1", (m.d0 * m.d1).to_string() + " != (" + c.to_string() + ")*I modulo relations");
}

bool is_valid(const MatrixFactorization& m) {
  try {
    validate(m);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_valid(const FPCDGModule& m) {
  try {
    validate(m);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

void check_same_category(const CDGRingSpec& a, Side sa, const CDGRingSpec& b, Side sb) {
  if (!(a == b)) throw RingMismatch("objects over different CDG-rings");
  if (sa != sb) throw RingMismatch("objects of different sides");
}

}  // namespace

void check_closed(const MFMorphism& f) {
  check_same_category(f.source.ring, f.source.side, f.target.ring, f.target.side);
  for (int p = 0; p < 2; ++p) {
    if (f.f(p).rows() != f.target.rank(p) || f.f(p).cols() != f.source.rank(p))
      throw DimensionMismatch("morphism component shape mismatch");
  }
  if (f.f1 * f.source.d0 != f.target.d0 * f.f0) throw NonClosedMorphism("f1*d0 != d0'*f0");
  if (f.f0 * f.source.d1 != f.target.d1 * f.f1) throw NonClosedMorphism("f0*d1 != d1'*f1");
}

void check_closed(const FPMorphism& f) {
  check_same_category(f.source.ring, f.source.side, f.target.ring, f.target.side);
  for (int p = 0; p < 2; ++p)
    if (!respects_relations(f.f(p), f.source.comp(p), f.target.comp(p)))
      throw IllDefinedMap("morphism does not respect relations");
  for (int p = 0; p < 2; ++p) {
    PolyMatrix diff = f.f(p + 1) * f.source.d(p) - f.target.d(p) * f.f(p);
    if (!f.target.comp(p + 1).contains_in_relations(diff)) throw NonClosedMorphism("f does not commute with d");
  }
}

bool is_closed(const MFMorphism& f) {
  try {
    check_closed(f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_closed(const FPMorphism& f) {
  try {
    check_closed(f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---- shift and sums ------------------------------------------------------------

namespace {

int parity_of(int n) { return ((n % 2) + 2) % 2; }

}  // namespace

MatrixFactorization shift(const MatrixFactorization& m, int n) {
  if (parity_of(n) == 0) return m;
  Poly s = Poly::constant(m.field(), kShiftSign);
  return MatrixFactorization(m.ring, m.side, s * m.d1, s * m.d0);
}

FPCDGModule shift(const FPCDGModule& m, int n) {
  if (parity_of(n) == 0) return m;
  Poly s = Poly::constant(m.field(), kShiftSign);
  return FPCDGModule(m.ring, m.side, m.comp1, m.comp0, s * m.d1, s * m.d0);
}

MFMorphism shift(const MFMorphism& f, int n) {
  if (parity_of(n) == 0) return f;
  return {shift(f.source, n), shift(f.target, n), f.f1, f.f0};
}

FPMorphism shift(const FPMorphism& f, int n) {
  if (parity_of(n) == 0) return f;
  return {shift(f.source, n), shift(f.target, n), f.f1, f.f0};
}

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b) {
  check_same_category(a.ring, a.side, b.ring, b.side);
  return MatrixFactorization(a.ring, a.side, block_diag(a.d0, b.d0), block_diag(a.d1, b.d1));
}

FPCDGModule direct_sum(const FPCDGModule& a, const FPCDGModule& b) {
  check_same_category(a.ring, a.side, b.ring, b.side);
  return FPCDGModule(a.ring, a.side, direct_sum(a.comp0, b.comp0), direct_sum(a.comp1, b.comp1),
                     block_diag(a.d0, b.d0), block_diag(a.d1, b.d1));
}

// ---- cones ----------------------------------------------------------------------

ConeResult<FPCDGModule> cone(const FPMorphism& f) {
  check_closed(f);
  const FPCDGModule& L = f.source;
  const FPCDGModule& M = f.target;
  FieldSpec fs = M.field();
  Poly s = Poly::constant(fs, kShiftSign);
  FPModule comp[2];
  PolyMatrix d[2];
  for (int p = 0; p < 2; ++p) comp[p] = direct_sum(M.comp(p), L.comp(p + 1));
  for (int p = 0; p < 2; ++p) {
    const int mp = M.generators(p), mq = M.generators(p + 1);
    const int lq = L.generators(p + 1), lp = L.generators(p);
    PolyMatrix dp(fs, mq + lp, mp + lq);
    dp.set_block(0, 0, M.d(p));
    dp.set_block(0, mp, f.f(p + 1));
    dp.set_block(mq, mp, s * L.d(p + 1));
    d[p] = dp;
  }
  ConeResult<FPCDGModule> r;
  r.cone = FPCDGModule(M.ring, M.side, comp[0], comp[1], d[0], d[1]);
  FPCDGModule Ls = shift(L, 1);
  PolyMatrix in[2], pr[2], ins[2], prs[2];
  for (int p = 0; p < 2; ++p) {
    const int mp = M.generators(p), lq = L.generators(p + 1);
    in[p] = vstack(PolyMatrix::identity(fs, mp), PolyMatrix(fs, lq, mp));
    pr[p] = hstack(PolyMatrix(fs, lq, mp), PolyMatrix::identity(fs, lq));
    ins[p] = in[p].transpose();
    prs[p] = pr[p].transpose();
  }
  r.incl = {M, r.cone, in[0], in[1]};
  r.proj = {r.cone, Ls, pr[0], pr[1]};
  r.incl_split = {ins[0], ins[1]};
  r.proj_split = {prs[0], prs[1]};
  return r;
}

ConeResult<MatrixFactorization> cone(const MFMorphism& f) {
  check_closed(f);
  ConeResult<FPCDGModule> c = cone(to_fp(f));
  ConeResult<MatrixFactorization> r;
  r.cone = c.cone.to_mf();
  r.incl = to_mf(c.incl);
  r.proj = to_mf(c.proj);
  r.incl_split = c.incl_split;
  r.proj_split = c.proj_split;
  return r;
}

// ---- G+ and G- -------------------------------------------------------------------

GFunctorResult g_plus(const CDGRingSpec& ring, Side side, int r0, int r1) {
  FieldSpec f = ring.field;
  const int n = r0 + r1;
  PolyMatrix d0(f, n, n), d1(f, n, n);
  const Poly& w = ring.w;
  if (side == Side::left) {
    // parity 0 = F0 + delta F1, parity 1 = F1 + delta F0; delta acts as d.
    d0.set_block(0, r0, PolyMatrix::scalar(w, r1));
    d0.set_block(r1, 0, PolyMatrix::identity(f, r0));
    d1.set_block(0, r1, PolyMatrix::scalar(w, r0));
    d1.set_block(r0, 0, PolyMatrix::identity(f, r1));
  } else {
    // parity 0 = F0 + F1 delta, parity 1 = F1 + F0 delta; y.delta = -(-1)^|y| d(y).
    d0.set_block(0, r0, PolyMatrix::scalar(-w, r1));
    d0.set_block(r1, 0, -PolyMatrix::identity(f, r0));
    d1.set_block(0, r1, PolyMatrix::scalar(w, r0));
    d1.set_block(r0, 0, PolyMatrix::identity(f, r1));
  }
  GFunctorResult g;
  g.module = MatrixFactorization(ring, side, d0, d1);
  // 0 -> F -> G+(F) -> F[-1] -> 0: F sits in the leading block of each parity.
  g.sub = {vstack(PolyMatrix::identity(f, r0), PolyMatrix(f, r1, r0)),
           vstack(PolyMatrix::identity(f, r1), PolyMatrix(f, r0, r1))};
  g.quot = {hstack(PolyMatrix(f, r1, r0), PolyMatrix::identity(f, r1)),
            hstack(PolyMatrix(f, r0, r1), PolyMatrix::identity(f, r0))};
  return g;
}

GFunctorResult g_minus(const CDGRingSpec& ring, Side side, int r0, int r1) {
  FieldSpec f = ring.field;
  const int n = r0 + r1;
  const Poly c = side == Side::left ? ring.w : -ring.w;
  // parity i = (phi(1) in F_i) + (phi(delta) in F_{i+1}).
  PolyMatrix d0(f, n, n), d1(f, n, n);
  d0.set_block(0, r0, PolyMatrix::identity(f, r1));
  d0.set_block(r1, 0, PolyMatrix::scalar(c, r0));
  d1.set_block(0, r1, PolyMatrix::identity(f, r0));
  d1.set_block(r0, 0, PolyMatrix::scalar(c, r1));
  GFunctorResult g;
  g.module = MatrixFactorization(ring, side, d0, d1);
  // 0 -> F[1] -> G-(F) -> F -> 0: F[1] is the phi(delta) block.
  g.sub = {vstack(PolyMatrix(f, r0, r1), PolyMatrix::identity(f, r1)),
           vstack(PolyMatrix(f, r1, r0), PolyMatrix::identity(f, r0))};
  g.quot = {hstack(PolyMatrix::identity(f, r0), PolyMatrix(f, r0, r1)),
            hstack(PolyMatrix::identity(f, r1), PolyMatrix(f, r1, r0))};
  return g;
}

FreeCover free_cover(const FPCDGModule& N) {
  FieldSpec f = N.field();
  const int g0 = N.generators(0), g1 = N.generators(1);
  FreeCover c;
  c.P0 = g_plus(N.ring, N.side, g0, g1).module;
  // The delta-generators map to delta times the generator, expressed through d_N.
  PolyMatrix x0 = N.d1;
  PolyMatrix x1 = N.side == Side::left ? N.d0 : -N.d0;
  PolyMatrix e0 = hstack(PolyMatrix::identity(f, g0), x0);
  PolyMatrix e1 = hstack(PolyMatrix::identity(f, g1), x1);
  c.epi = {FPCDGModule::from_mf(c.P0), N, e0, e1};
  return c;
}

// ---- morphism algebra -------------------------------------------------------------

template <>
MFMorphism identity<MatrixFactorization>(const MatrixFactorization& m) {
  return {m, m, PolyMatrix::identity(m.field(), m.rank0), PolyMatrix::identity(m.field(), m.rank1)};
}

template <>
FPMorphism identity<FPCDGModule>(const FPCDGModule& m) {
  return {m, m, PolyMatrix::identity(m.field(), m.generators(0)), PolyMatrix::identity(m.field(), m.generators(1))};
}

MFMorphism zero_morphism(const MatrixFactorization& s, const MatrixFactorization& t) {
  return {s, t, PolyMatrix(s.field(), t.rank0, s.rank0), PolyMatrix(s.field(), t.rank1, s.rank1)};
}

FPMorphism zero_morphism(const FPCDGModule& s, const FPCDGModule& t) {
  return {s, t, PolyMatrix(s.field(), t.generators(0), s.generators(0)),
          PolyMatrix(s.field(), t.generators(1), s.generators(1))};
}

MFMorphism compose(const MFMorphism& g, const MFMorphism& f) {
  if (!(f.target == g.source)) throw DimensionMismatch("morphisms are not composable");
  return {f.source, g.target, g.f0 * f.f0, g.f1 * f.f1};
}

FPMorphism compose(const FPMorphism& g, const FPMorphism& f) {
  if (!(f.target == g.source)) throw DimensionMismatch("morphisms are not composable");
  return {f.source, g.target, g.f0 * f.f0, g.f1 * f.f1};
}

MFMorphism operator-(const MFMorphism& a, const MFMorphism& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) throw DimensionMismatch("morphisms are not parallel");
  return {a.source, a.target, a.f0 - b.f0, a.f1 - b.f1};
}

MFMorphism operator+(const MFMorphism& a, const MFMorphism& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) throw DimensionMismatch("morphisms are not parallel");
  return {a.source, a.target, a.f0 + b.f0, a.f1 + b.f1};
}

FPMorphism to_fp(const MFMorphism& f) {
  return {FPCDGModule::from_mf(f.source), FPCDGModule::from_mf(f.target), f.f0, f.f1};
}

MFMorphism to_mf(const FPMorphism& f) { return {f.source.to_mf(), f.target.to_mf(), f.f0, f.f1}; }

}  // namespace cdgmf
