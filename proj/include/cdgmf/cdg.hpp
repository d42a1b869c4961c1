#pragma once

#include <string>

#include "cdgmf/fpmodule.hpp"
#include "cdgmf/matrix.hpp"

namespace cdgmf {

// Sign of the differential under a one-step shift: d_{M[n]} = kShiftSign^n d_M.
inline constexpr int kShiftSign = -1;

enum class Side { left, right };

std::string to_string(Side s);

// B = k[x][T, 1/T], deg T = 2, zero differential, curvature w*T.
struct CDGRingSpec {
  FieldSpec field;
  Poly w;

  CDGRingSpec() = default;
  CDGRingSpec(FieldSpec f, Poly potential);
  // d^2 on a module of the given side: +w for left modules, -w for right modules.
  Poly curvature(Side side) const;
  friend bool operator==(const CDGRingSpec& a, const CDGRingSpec& b) {
    return a.field == b.field && a.w == b.w;
  }
};

// Graded-free CDG-module; d0: M0 -> M1 (rank1 x rank0), d1: M1 -> M0.
struct MatrixFactorization {
  CDGRingSpec ring;
  Side side = Side::left;
  int rank0 = 0, rank1 = 0;
  PolyMatrix d0, d1;

  MatrixFactorization() = default;
  MatrixFactorization(CDGRingSpec r, Side s, PolyMatrix d0_, PolyMatrix d1_);
  static MatrixFactorization zero(const CDGRingSpec& r, Side s);

  FieldSpec field() const { return ring.field; }
  int rank(int parity) const { return parity % 2 == 0 ? rank0 : rank1; }
  const PolyMatrix& d(int parity) const { return parity % 2 == 0 ? d0 : d1; }
  bool is_zero_object() const { return rank0 == 0 && rank1 == 0; }
  friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b);
};

// CDG-module with finitely presented components; d0, d1 act on generators.
struct FPCDGModule {
  CDGRingSpec ring;
  Side side = Side::right;
  FPModule comp0, comp1;
  PolyMatrix d0, d1;

  FPCDGModule() = default;
  FPCDGModule(CDGRingSpec r, Side s, FPModule c0, FPModule c1, PolyMatrix d0_, PolyMatrix d1_);
  static FPCDGModule from_mf(const MatrixFactorization& m);

  FieldSpec field() const { return ring.field; }
  const FPModule& comp(int parity) const { return parity % 2 == 0 ? comp0 : comp1; }
  const PolyMatrix& d(int parity) const { return parity % 2 == 0 ? d0 : d1; }
  int generators(int parity) const { return comp(parity).generators(); }
  bool has_free_components() const;
  // Only for free components with no relations; throws otherwise.
  MatrixFactorization to_mf() const;
  friend bool operator==(const FPCDGModule& a, const FPCDGModule& b);
};

// Degree-0 map of underlying graded modules (not necessarily closed).
struct GradedMap {
  PolyMatrix m0, m1;
  const PolyMatrix& m(int parity) const { return parity % 2 == 0 ? m0 : m1; }
};

// Degree-0 map commuting with the differentials.
template <class Obj>
struct ClosedMorphism {
  Obj source, target;
  PolyMatrix f0, f1;
  const PolyMatrix& f(int parity) const { return parity % 2 == 0 ? f0 : f1; }
  friend bool operator==(const ClosedMorphism& a, const ClosedMorphism& b) {
    return a.source == b.source && a.target == b.target && a.f0 == b.f0 && a.f1 == b.f1;
  }
};
using MFMorphism = ClosedMorphism<MatrixFactorization>;
using FPMorphism = ClosedMorphism<FPCDGModule>;

// Throws CurvatureMismatch, IllDefinedMap or DimensionMismatch.
void validate(const MatrixFactorization& m);
void validate(const FPCDGModule& m);
bool is_valid(const MatrixFactorization& m);
bool is_valid(const FPCDGModule& m);

// Throws NonClosedMorphism (or DimensionMismatch / IllDefinedMap).
void check_closed(const MFMorphism& f);
void check_closed(const FPMorphism& f);
bool is_closed(const MFMorphism& f);
bool is_closed(const FPMorphism& f);

MatrixFactorization shift(const MatrixFactorization& m, int n);
FPCDGModule shift(const FPCDGModule& m, int n);
MFMorphism shift(const MFMorphism& f, int n);
FPMorphism shift(const FPMorphism& f, int n);

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);
FPCDGModule direct_sum(const FPCDGModule& a, const FPCDGModule& b);

template <class Obj>
struct ConeResult {
  Obj cone;
  ClosedMorphism<Obj> incl;  // target -> cone
  ClosedMorphism<Obj> proj;  // cone -> source[1]
  GradedMap incl_split;      // cone -> target, graded retraction of incl
  GradedMap proj_split;      // source[1] -> cone, graded section of proj
};

// Underlying target + source[1], differential [[d_target, f], [0, -d_source]].
ConeResult<MatrixFactorization> cone(const MFMorphism& f);
ConeResult<FPCDGModule> cone(const FPMorphism& f);

// Free graded module with r0 generators in even and r1 in odd degree.
struct GFunctorResult {
  MatrixFactorization module;
  GradedMap sub;    // inclusion of the sub term of the short exact sequence
  GradedMap quot;   // projection onto the quotient term
};

// B[delta] (x) F: 0 -> F -> G+(F) -> F[-1] -> 0, ranks (r0 + r1, r0 + r1).
GFunctorResult g_plus(const CDGRingSpec& ring, Side side, int r0, int r1);
// Hom(B[delta], F): 0 -> F[1] -> G-(F) -> F -> 0.
GFunctorResult g_minus(const CDGRingSpec& ring, Side side, int r0, int r1);

// Closed epi G+(generators of N) -> N, one generator per stored generator of N.
struct FreeCover {
  MatrixFactorization P0;
  FPMorphism epi;
};
FreeCover free_cover(const FPCDGModule& N);

template <class Obj>
ClosedMorphism<Obj> identity(const Obj& m);
MFMorphism zero_morphism(const MatrixFactorization& s, const MatrixFactorization& t);
FPMorphism zero_morphism(const FPCDGModule& s, const FPCDGModule& t);
// g after f.
MFMorphism compose(const MFMorphism& g, const MFMorphism& f);
FPMorphism compose(const FPMorphism& g, const FPMorphism& f);
MFMorphism operator-(const MFMorphism& a, const MFMorphism& b);
MFMorphism operator+(const MFMorphism& a, const MFMorphism& b);
FPMorphism to_fp(const MFMorphism& f);
MFMorphism to_mf(const FPMorphism& f);

}  // namespace cdgmf
