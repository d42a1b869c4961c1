#include "cdgmf/resolve.hpp"

#include "cdgmf/errors.hpp"
#include "cdgmf/smith.hpp"

namespace cdgmf {

namespace {

// Unique X with K X = B for K of full column rank.
PolyMatrix solve_unique(const PolyMatrix& K, const PolyMatrix& B, const char* what) {
  if (B.cols() == 0 || K.cols() == 0) return PolyMatrix(B.field(), K.cols(), B.cols());
  auto sol = solve_linear(K, B);
  if (!sol) throw InternalAssertionFailure(what);
  return sol->particular;
}

bool spans_equal(const PolyMatrix& A, const PolyMatrix& B) {
  if (A.rows() != B.rows()) return false;
  auto in = [](const PolyMatrix& X, const PolyMatrix& Y) {
    return Y.cols() == 0 || (X.cols() > 0 && solve_linear(X, Y).has_value()) ||
           (X.cols() == 0 && Y.is_zero());
  };
  return in(A, B) && in(B, A);
}

}  // namespace

// ---- resolutions ------------------------------------------------------------------

Resolution resolve(const FPCDGModule& N) {
  validate(N);
  FieldSpec f = N.field();
  FreeCover fc = free_cover(N);
  PolyMatrix K[2];
  for (int p = 0; p < 2; ++p) K[p] = fp_kernel(fc.epi.f(p), fc.epi.source.comp(p), N.comp(p)).basis;
  // Restrict d: d_P0 K_p = K_(p+1) X_p.
  PolyMatrix X[2];
  for (int p = 0; p < 2; ++p)
    X[p] = solve_unique(K[(p + 1) % 2], fc.P0.d(p) * K[p], "kernel of the free cover is not closed under d");
  Resolution r;
  r.target = N;
  r.P0 = fc.P0;
  if (K[0].cols() == 0 && K[1].cols() == 0) {
    r.P1 = MatrixFactorization::zero(N.ring, N.side);
  } else {
    r.P1 = MatrixFactorization(N.ring, N.side, X[0], X[1]);
  }
  r.epi = fc.epi;
  r.incl = {r.P1, r.P0, K[0].cols() ? K[0] : PolyMatrix(f, r.P0.rank0, 0),
            K[1].cols() ? K[1] : PolyMatrix(f, r.P0.rank1, 0)};
  r.free_cover_form = true;
  r.g0 = N.generators(0);
  r.g1 = N.generators(1);
  check_resolution(r);
  return r;
}

void check_resolution(const Resolution& r) {
  auto fail = [](const std::string& m) { throw InternalAssertionFailure("resolution: " + m); };
  if (!is_valid(r.P0) || !is_valid(r.P1)) fail("terms do not validate");
  if (!(r.epi.source == FPCDGModule::from_mf(r.P0)) || !(r.epi.target == r.target)) fail("epi has wrong ends");
  if (!(r.incl.source == r.P1) || !(r.incl.target == r.P0)) fail("incl has wrong ends");
  if (!is_closed(r.epi) || !is_closed(r.incl)) fail("maps are not closed");
  for (int p = 0; p < 2; ++p) {
    const FPModule& Np = r.target.comp(p);
    const PolyMatrix& e = r.epi.f(p);
    const PolyMatrix& k = r.incl.f(p);
    if (!fp_cokernel(e, r.epi.source.comp(p), Np).is_zero()) fail("epi is not surjective");
    if (k.cols() > 0 && rank(k) != k.cols()) fail("incl is not injective");
    if (k.cols() > 0 && !Np.contains_in_relations(e * k)) fail("epi o incl != 0");
    PolyMatrix ker = fp_kernel(e, r.epi.source.comp(p), Np).basis;
    if (!spans_equal(ker, k)) fail("image of incl is not the kernel of epi");
  }
}

Resolution shift(const Resolution& r) {
  Resolution s;
  s.target = shift(r.target, 1);
  s.P0 = shift(r.P0, 1);
  s.P1 = shift(r.P1, 1);
  s.epi = shift(r.epi, 1);
  s.incl = shift(r.incl, 1);
  return s;
}

ResolutionLift lift(const FPMorphism& f, const Resolution& src, const Resolution& tgt, const GradedMap* perturb) {
  check_closed(f);
  if (!src.free_cover_form) throw DimensionMismatch("lift: source resolution is not a free cover");
  if (!(f.source == src.target) || !(f.target == tgt.target)) throw DimensionMismatch("lift: wrong resolutions");
  FieldSpec fs = f.source.field();
  const int g[2] = {src.g0, src.g1};
  // L_p : F_p -> P0'_p with epi' L_p = f_p modulo relations of N'_p.
  PolyMatrix L[2];
  for (int p = 0; p < 2; ++p) {
    const int rows = tgt.P0.rank(p);
    if (g[p] == 0) {
      L[p] = PolyMatrix(fs, rows, 0);
      continue;
    }
    const FPModule& Np = tgt.target.comp(p);
    if (Np.generators() == 0) {
      L[p] = PolyMatrix(fs, rows, g[p]);
    } else {
      auto sol = solve_linear(hstack(tgt.epi.f(p), Np.presentation()), f.f(p));
      if (!sol) throw InternalAssertionFailure("lift: target epi is not surjective");
      L[p] = sol->particular.rows_range(0, rows);
    }
    if (perturb) {
      const PolyMatrix& K = tgt.incl.f(p);
      if (K.cols() > 0) L[p] += K * perturb->m(p);
    }
  }
  // Right G+: even = F0 + F1 delta, odd = F1 + F0 delta.
  const MatrixFactorization& Pt = tgt.P0;
  PolyMatrix a00 = hstack(L[0], Pt.d1 * L[1]);
  PolyMatrix a01 = hstack(L[1], -(Pt.d0 * L[0]));
  if (src.target.side == Side::left) a01 = hstack(L[1], Pt.d0 * L[0]);
  ResolutionLift a;
  a.a0 = {src.P0, tgt.P0, a00, a01};
  check_closed(a.a0);
  // a0 maps ker epi into ker epi'.
  PolyMatrix b[2];
  for (int p = 0; p < 2; ++p)
    b[p] = solve_unique(tgt.incl.f(p), a.a0.f(p) * src.incl.f(p), "lift: kernel not preserved");
  a.a1 = {src.P1, tgt.P1, b[0], b[1]};
  check_closed(a.a1);
  for (int p = 0; p < 2; ++p) {
    PolyMatrix diff = tgt.epi.f(p) * a.a0.f(p) - f.f(p) * src.epi.f(p);
    if (!tgt.target.comp(p).contains_in_relations(diff)) throw InternalAssertionFailure("lift does not cover f");
  }
  return a;
}

Resolution cone_resolution(const FPMorphism& f, const Resolution& src, const Resolution& tgt,
                           const ResolutionLift& a) {
  Resolution r;
  r.target = cone(f).cone;
  r.P0 = cone(a.a0).cone;
  r.P1 = cone(a.a1).cone;
  PolyMatrix e[2], k[2];
  for (int p = 0; p < 2; ++p) {
    e[p] = block_diag(tgt.epi.f(p), src.epi.f(p + 1));
    k[p] = block_diag(tgt.incl.f(p), src.incl.f(p + 1));
  }
  r.epi = {FPCDGModule::from_mf(r.P0), r.target, e[0], e[1]};
  r.incl = {r.P1, r.P0, k[0], k[1]};
  check_resolution(r);
  return r;
}

// ---- duals and totalization -------------------------------------------------------

MatrixFactorization dualize(const MatrixFactorization& P) {
  Side s = P.side == Side::right ? Side::left : Side::right;
  MatrixFactorization Q(P.ring, s, -P.d1.transpose(), P.d0.transpose());
  validate(Q);
  return Q;
}

MFMorphism dualize(const MFMorphism& f) {
  return {dualize(f.target), dualize(f.source), f.f0.transpose(), f.f1.transpose()};
}

namespace {

int par(int n) { return ((n % 2) + 2) % 2; }

void check_complex(const CDGComplex& c) {
  if (c.terms.empty()) throw DimensionMismatch("totalize: empty complex");
  if (c.maps.size() + 1 != c.terms.size()) throw DimensionMismatch("totalize: wrong number of maps");
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const MFMorphism& m = c.maps[i];
    if (!(m.source == c.terms[i]) || !(m.target == c.terms[i + 1]))
      throw DimensionMismatch("totalize: map ends do not match the terms");
    check_closed(m);
    if (i + 1 < c.maps.size()) {
      MFMorphism sq = compose(c.maps[i + 1], m);
      if (!sq.f0.is_zero() || !sq.f1.is_zero()) throw IllDefinedMap("totalize: consecutive maps do not compose to zero");
    }
  }
}

// Offsets of C^n_(p-n) inside S_p.
std::vector<int> offsets(const CDGComplex& c, int p) {
  std::vector<int> off;
  int o = 0;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    off.push_back(o);
    o += c.terms[i].rank(par(p - c.start - static_cast<int>(i)));
  }
  off.push_back(o);
  return off;
}

}  // namespace

MatrixFactorization totalize(const CDGComplex& c) {
  check_complex(c);
  FieldSpec fs = c.terms[0].field();
  const std::size_t L = c.terms.size();
  PolyMatrix d[2];
  for (int p = 0; p < 2; ++p) {
    std::vector<int> src = offsets(c, p), dst = offsets(c, p + 1);
    PolyMatrix dp(fs, dst.back(), src.back());
    for (std::size_t i = 0; i < L; ++i) {
      const int n = c.start + static_cast<int>(i);
      const int q = par(p - n);
      PolyMatrix own = c.terms[i].d(q);
      if (par(n) == 1) own = -own;
      dp.set_block(dst[i], src[i], own);
      // C^n_(p-n) -> C^(n+1)_((p+1)-(n+1)).
      if (i + 1 < L) dp.set_block(dst[i + 1], src[i], c.maps[i].f(q));
    }
    d[p] = dp;
  }
  MatrixFactorization S(c.terms[0].ring, c.terms[0].side, d[0], d[1]);
  validate(S);
  return S;
}

MFMorphism totalize(const ChainMap& f) {
  const CDGComplex& a = f.source;
  const CDGComplex& b = f.target;
  if (a.start != b.start || a.terms.size() != b.terms.size() || f.comps.size() != a.terms.size())
    throw DimensionMismatch("totalize: chain map shape");
  for (std::size_t i = 0; i < f.comps.size(); ++i) {
    check_closed(f.comps[i]);
    if (i + 1 < f.comps.size()) {
      MFMorphism l = compose(b.maps[i], f.comps[i]), r = compose(f.comps[i + 1], a.maps[i]);
      if (!(l.f0 == r.f0) || !(l.f1 == r.f1)) throw NonClosedMorphism("totalize: not a chain map");
    }
  }
  MatrixFactorization S = totalize(a), T = totalize(b);
  PolyMatrix m[2];
  for (int p = 0; p < 2; ++p) {
    std::vector<int> so = offsets(a, p), to = offsets(b, p);
    PolyMatrix mp(S.field(), to.back(), so.back());
    for (std::size_t i = 0; i < f.comps.size(); ++i)
      mp.set_block(to[i], so[i], f.comps[i].f(par(p - a.start - static_cast<int>(i))));
    m[p] = mp;
  }
  MFMorphism r{S, T, m[0], m[1]};
  check_closed(r);
  return r;
}

// ---- Xi ---------------------------------------------------------------------------

XiResult xi(const Resolution& r) {
  XiResult x;
  x.resolution = r;
  x.Q0 = dualize(r.P0);
  x.Q1 = dualize(r.P1);
  x.dual_incl = dualize(r.incl);
  x.xi = totalize(CDGComplex{{x.Q0, x.Q1}, {x.dual_incl}, 0});
  return x;
}

XiResult xi(const FPCDGModule& N) { return xi(resolve(N)); }

MFMorphism xi_on_lift(const ResolutionLift& a, const XiResult& src, const XiResult& tgt) {
  ChainMap c;
  c.source = CDGComplex{{tgt.Q0, tgt.Q1}, {tgt.dual_incl}, 0};
  c.target = CDGComplex{{src.Q0, src.Q1}, {src.dual_incl}, 0};
  c.comps = {dualize(a.a0), dualize(a.a1)};
  return totalize(c);
}

MFMorphism xi_on_morphism(const FPMorphism& f, const XiResult& src, const XiResult& tgt, const GradedMap* perturb) {
  return xi_on_lift(lift(f, src.resolution, tgt.resolution, perturb), src, tgt);
}

MFMorphism xi_on_morphism(const FPMorphism& f) {
  XiResult s = xi(f.source), t = xi(f.target);
  return xi_on_morphism(f, s, t);
}

BlockLayout xi_layout(const XiResult& x, const std::string& prefix) {
  BlockLayout l;
  for (int p = 0; p < 2; ++p) {
    l[static_cast<std::size_t>(p)] = {{prefix + "Q0." + std::to_string(p), x.Q0.rank(p)},
                                      {prefix + "Q1." + std::to_string(1 - p), x.Q1.rank(1 - p)}};
  }
  return l;
}

std::optional<MFMorphism> find_signed_block_iso(const MatrixFactorization& A, const BlockLayout& la,
                                                const MatrixFactorization& B, const BlockLayout& lb) {
  if (A.rank0 != B.rank0 || A.rank1 != B.rank1) return std::nullopt;
  FieldSpec fs = A.field();
  struct Placement {
    int parity, src_off, dst_off, size;
  };
  std::vector<Placement> blocks;
  for (int p = 0; p < 2; ++p) {
    const auto& ba = la[static_cast<std::size_t>(p)];
    const auto& bb = lb[static_cast<std::size_t>(p)];
    int so = 0;
    for (const Block& x : ba) {
      int to = 0;
      bool found = false;
      for (const Block& y : bb) {
        if (y.label == x.label) {
          if (y.size != x.size) return std::nullopt;
          found = true;
          break;
        }
        to += y.size;
      }
      if (!found) return std::nullopt;
      if (x.size > 0) blocks.push_back({p, so, to, x.size});
      so += x.size;
    }
    if (so != A.rank(p)) throw DimensionMismatch("block layout does not cover the module");
  }
  const std::size_t nb = blocks.size();
  if (nb > 20) throw DimensionMismatch("too many blocks for a sign search");
  for (unsigned long mask = 0; mask < (1UL << nb); ++mask) {
    PolyMatrix m[2] = {PolyMatrix(fs, B.rank0, A.rank0), PolyMatrix(fs, B.rank1, A.rank1)};
    for (std::size_t i = 0; i < nb; ++i) {
      const Placement& b = blocks[i];
      PolyMatrix I = PolyMatrix::identity(fs, b.size);
      m[b.parity].set_block(b.dst_off, b.src_off, (mask >> i) & 1UL ? -I : I);
    }
    MFMorphism phi{A, B, m[0], m[1]};
    if (is_closed(phi)) return phi;
  }
  return std::nullopt;
}

}  // namespace cdgmf
