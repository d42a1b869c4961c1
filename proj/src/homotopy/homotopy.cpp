#include "cdgmf/homotopy.hpp"

#include <vector>

#include "cdgmf/errors.hpp"
#include "cdgmf/smith.hpp"

namespace cdgmf {

namespace {

GradedMap as_graded(const MFMorphism& f) { return {f.f0, f.f1}; }

// Even phi after odd X.
HomotopyWitness after(const GradedMap& phi, const HomotopyWitness& X) { return {phi.m1 * X.h0, phi.m0 * X.h1}; }
// Odd X after even psi.
HomotopyWitness before(const HomotopyWitness& X, const GradedMap& psi) { return {X.h0 * psi.m0, X.h1 * psi.m1}; }
GradedMap compose(const GradedMap& a, const GradedMap& b) { return {a.m0 * b.m0, a.m1 * b.m1}; }

HomotopyWitness minus(const HomotopyWitness& a, const HomotopyWitness& b) { return {a.h0 - b.h0, a.h1 - b.h1}; }

}  // namespace

GradedMap homotopy_boundary(const HomotopyWitness& h, const MatrixFactorization& A, const MatrixFactorization& B) {
  return {B.d1 * h.h0 + h.h1 * A.d0, B.d0 * h.h1 + h.h0 * A.d1};
}

bool check_witness(const MFMorphism& f, const MFMorphism& g, const HomotopyWitness& h) {
  const MatrixFactorization& A = f.source;
  const MatrixFactorization& B = f.target;
  if (h.h0.rows() != B.rank1 || h.h0.cols() != A.rank0 || h.h1.rows() != B.rank0 || h.h1.cols() != A.rank1)
    return false;
  GradedMap b = homotopy_boundary(h, A, B);
  return f.f0 - g.f0 == b.m0 && f.f1 - g.f1 == b.m1;
}

MinimalModel minimal_model(const MatrixFactorization& m) {
  FieldSpec f = m.field();
  const Poly c = m.ring.curvature(m.side);
  if (c.is_zero() || m.rank0 != m.rank1 || m.rank0 == 0) {
    return {m, identity(m), identity(m),
            {PolyMatrix(f, m.rank1, m.rank0), PolyMatrix(f, m.rank0, m.rank1)}};
  }
  const int r = m.rank0;
  // U d0 V = D; in the new bases d0 = D and d1 = c D^{-1}, both diagonal.
  SmithForm s = smith_normal_form(m.d0, {true, true});
  if (s.rank != r) throw InternalAssertionFailure("d0 of a matrix factorization with w != 0 is singular");
  std::vector<int> keep;
  PolyMatrix hT0(f, r, r), hT1(f, r, r);  // contraction on the split-off summands
  std::vector<Poly> dk, ek;
  for (int i = 0; i < r; ++i) {
    Poly d = s.D(i, i);
    Poly e = Poly::exact_div(c, d);
    XGcd g = xgcd(d, e);
    if (g.g.is_one()) {
      hT1(i, i) = g.s;  // s d + t e = 1
      hT0(i, i) = g.t;
    } else {
      keep.push_back(i);
      dk.push_back(d);
      ek.push_back(e);
    }
  }
  const int k = static_cast<int>(keep.size());
  PolyMatrix rd0(f, k, k), rd1(f, k, k);
  PolyMatrix i0(f, r, k), i1(f, r, k), p0(f, k, r), p1(f, k, r);
  for (int a = 0; a < k; ++a) {
    const int i = keep[static_cast<std::size_t>(a)];
    rd0(a, a) = dk[static_cast<std::size_t>(a)];
    rd1(a, a) = ek[static_cast<std::size_t>(a)];
    i0.set_block(0, a, s.V.col(i));
    i1.set_block(0, a, s.U_inv.col(i));
    p0.set_block(a, 0, s.V_inv.rows_range(i, 1));
    p1.set_block(a, 0, s.U.rows_range(i, 1));
  }
  MinimalModel mm;
  mm.reduced = MatrixFactorization(m.ring, m.side, rd0, rd1);
  mm.incl = {mm.reduced, m, i0, i1};
  mm.proj = {m, mm.reduced, p0, p1};
  // incl o proj - id = -phi^{-1} [d, h_T] phi with phi = (V^{-1}, U).
  mm.h.h0 = -(s.U_inv * hT0 * s.V_inv);
  mm.h.h1 = -(s.V * hT1 * s.U);
  return mm;
}

std::optional<HomotopyWitness> homotopy_witness(const MFMorphism& f, const MFMorphism& g) {
  check_closed(f);
  check_closed(g);
  if (!(f.source == g.source) || !(f.target == g.target)) throw DimensionMismatch("morphisms are not parallel");
  const MatrixFactorization& A = f.source;
  const MatrixFactorization& B = f.target;
  GradedMap delta = {f.f0 - g.f0, f.f1 - g.f1};
  if (delta.m0.is_zero() && delta.m1.is_zero())
    return HomotopyWitness{PolyMatrix(A.field(), B.rank1, A.rank0), PolyMatrix(A.field(), B.rank0, A.rank1)};

  MinimalModel ma = minimal_model(A), mb = minimal_model(B);
  GradedMap dr = compose(as_graded(mb.proj), compose(delta, as_graded(ma.incl)));
  PeriodicComplex hc = hom_complex(ma.reduced, mb.reduced);
  HomotopyWitness hr{PolyMatrix(A.field(), mb.reduced.rank1, ma.reduced.rank0),
                     PolyMatrix(A.field(), mb.reduced.rank0, ma.reduced.rank1)};
  if (!(dr.m0.is_zero() && dr.m1.is_zero())) {
    auto sol = solve_linear(hc.e1, vec_even(dr.m0, dr.m1));
    if (!sol) return std::nullopt;
    GradedMap u = unvec_odd(sol->particular, ma.reduced, mb.reduced);
    hr = {u.m0, u.m1};
  }
  // Transport back: h = incl_B h' proj_A - h_B D - D h_A - h_B D [d, h_A].
  HomotopyWitness h = before(after(as_graded(mb.incl), hr), as_graded(ma.proj));
  h = minus(h, before(mb.h, delta));
  h = minus(h, after(delta, ma.h));
  h = minus(h, before(mb.h, compose(delta, homotopy_boundary(ma.h, A, A))));
  if (!check_witness(f, g, h)) throw InternalAssertionFailure("transported homotopy fails the witness identity");
  return h;
}

Contractibility is_contractible(const MatrixFactorization& m) {
  Contractibility c;
  c.witness = homotopy_witness(identity(m), zero_morphism(m, m));
  c.contractible = c.witness.has_value();
  return c;
}

std::optional<HomotopyEquivalence> is_homotopy_equivalence(const MFMorphism& f) {
  check_closed(f);
  FieldSpec fs = f.source.field();
  MinimalModel ma = minimal_model(f.source), mb = minimal_model(f.target);
  const MatrixFactorization& A = ma.reduced;
  const MatrixFactorization& B = mb.reduced;
  GradedMap fr = compose(as_graded(mb.proj), compose(as_graded(f), as_graded(ma.incl)));

  // Unknowns: g in Hom^0(B, A), h1 in Hom^1(A, A), h2 in Hom^1(B, B).
  PeriodicComplex hBA = hom_complex(B, A), hAA = hom_complex(A, A), hBB = hom_complex(B, B);
  const int ng = hBA.e0.cols(), nh1 = hAA.e1.cols(), nh2 = hBB.e1.cols();
  const int r1 = hBA.e0.rows(), r2 = hAA.e1.rows(), r3 = hBB.e1.rows();
  PolyMatrix sys(fs, r1 + r2 + r3, ng + nh1 + nh2), rhs(fs, r1 + r2 + r3, 1);
  sys.set_block(0, 0, hBA.e0);
  // g o f and f o g, vectorized per parity block.
  PolyMatrix gf(fs, r2, ng), fg(fs, r3, ng);
  int goff = 0, aoff = 0, boff = 0;
  for (int p = 0; p < 2; ++p) {
    const PolyMatrix& fp = fr.m(p);
    gf.set_block(aoff, goff, kron(PolyMatrix::identity(fs, A.rank(p)), fp.transpose()));
    fg.set_block(boff, goff, kron(fp, PolyMatrix::identity(fs, B.rank(p))));
    goff += A.rank(p) * B.rank(p);
    aoff += A.rank(p) * A.rank(p);
    boff += B.rank(p) * B.rank(p);
  }
  sys.set_block(r1, 0, gf);
  sys.set_block(r1, ng, -hAA.e1);
  sys.set_block(r1 + r2, 0, fg);
  sys.set_block(r1 + r2, ng + nh1, -hBB.e1);
  rhs.set_block(r1, 0, vec_even(PolyMatrix::identity(fs, A.rank0), PolyMatrix::identity(fs, A.rank1)));
  rhs.set_block(r1 + r2, 0, vec_even(PolyMatrix::identity(fs, B.rank0), PolyMatrix::identity(fs, B.rank1)));
  auto sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;
  GradedMap gr = unvec_even(sol->particular.rows_range(0, ng), B, A);
  GradedMap g = compose(as_graded(ma.incl), compose(gr, as_graded(mb.proj)));
  MFMorphism inv{f.target, f.source, g.m0, g.m1};
  check_closed(inv);
  auto w1 = homotopy_witness(compose(inv, f), identity(f.source));
  auto w2 = homotopy_witness(compose(f, inv), identity(f.target));
  if (!w1 || !w2) throw InternalAssertionFailure("homotopy inverse on the minimal model does not lift");
  return HomotopyEquivalence{inv, *w1, *w2};
}

}  // namespace cdgmf
