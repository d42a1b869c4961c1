#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdgmf/cdg.hpp"

namespace cdgmf {

// 0 -> P1 -> P0 -> target -> 0, exact on both components; P0, P1 graded-free.
struct Resolution {
  FPCDGModule target;
  MatrixFactorization P0, P1;
  FPMorphism epi;    // from_mf(P0) -> target
  MFMorphism incl;   // P1 -> P0
  // P0 = G+(g0, g1) with epi the free cover; lifts out of this resolution need it.
  bool free_cover_form = false;
  int g0 = 0, g1 = 0;
};

Resolution resolve(const FPCDGModule& N);
// Throws InternalAssertionFailure describing the first failed condition.
void check_resolution(const Resolution& r);

// Resolutions of N[1] and of cone(f) assembled from given ones.
Resolution shift(const Resolution& r);
struct ResolutionLift {
  MFMorphism a0;  // P0 -> P0'
  MFMorphism a1;  // P1 -> P1'
};
// Chain map over f. The source must be in free-cover form. The optional perturbation
// (one matrix per parity, columns = generators of f.source) changes the lift by elements
// of ker(epi') on the generators.
ResolutionLift lift(const FPMorphism& f, const Resolution& src, const Resolution& tgt,
                    const GradedMap* perturb = nullptr);
Resolution cone_resolution(const FPMorphism& f, const Resolution& src, const Resolution& tgt,
                           const ResolutionLift& a);

// Hom(-, B): flips the side, d0 -> -d1^T, d1 -> d0^T.
MatrixFactorization dualize(const MatrixFactorization& P);
// f : P -> P' gives dualize(P') -> dualize(P).
MFMorphism dualize(const MFMorphism& f);

// Bounded complex C^start -> C^(start+1) -> ... of objects of one category.
struct CDGComplex {
  std::vector<MatrixFactorization> terms;
  std::vector<MFMorphism> maps;  // maps[i] : terms[i] -> terms[i+1]
  int start = 0;
};
struct ChainMap {
  CDGComplex source, target;
  std::vector<MFMorphism> comps;
};
// S_p = sum_n C^n_(p-n), ordered by n; d = (complex map) + (-1)^n d_(C^n).
MatrixFactorization totalize(const CDGComplex& c);
MFMorphism totalize(const ChainMap& f);

struct XiResult {
  MatrixFactorization xi;  // left
  Resolution resolution;
  MatrixFactorization Q0, Q1;  // duals of P0, P1
  MFMorphism dual_incl;        // Q0 -> Q1
};
XiResult xi(const FPCDGModule& N);
XiResult xi(const Resolution& r);
// xi(f.target) -> xi(f.source).
MFMorphism xi_on_morphism(const FPMorphism& f);
MFMorphism xi_on_morphism(const FPMorphism& f, const XiResult& src, const XiResult& tgt,
                          const GradedMap* perturb = nullptr);
// Same, for an already computed lift between the two resolutions.
MFMorphism xi_on_lift(const ResolutionLift& a, const XiResult& src, const XiResult& tgt);

// Named summands of each component, in order.
struct Block {
  std::string label;
  int size = 0;
};
using BlockLayout = std::array<std::vector<Block>, 2>;
BlockLayout xi_layout(const XiResult& x, const std::string& prefix);
// Closed isomorphism A -> B sending each labelled block of A to the same label in B
// by +-identity; searches all sign choices.
std::optional<MFMorphism> find_signed_block_iso(const MatrixFactorization& A, const BlockLayout& la,
                                                const MatrixFactorization& B, const BlockLayout& lb);

}  // namespace cdgmf
