#pragma once

#include <optional>

#include "cdgmf/cdg.hpp"
#include "cdgmf/complex.hpp"

namespace cdgmf {

// Degree -1 map A -> B: h0 : A0 -> B1, h1 : A1 -> B0.
struct HomotopyWitness {
  PolyMatrix h0, h1;
};

// [d, h] = d_B h + h d_A as a degree-0 graded map.
GradedMap homotopy_boundary(const HomotopyWitness& h, const MatrixFactorization& A, const MatrixFactorization& B);
// f - g == d h + h d exactly.
bool check_witness(const MFMorphism& f, const MFMorphism& g, const HomotopyWitness& h);

// Homotopy-equivalent model with the trivially contractible summands split off.
// proj o incl = id exactly and incl o proj - id = d h + h d.
struct MinimalModel {
  MatrixFactorization reduced;
  MFMorphism incl;  // reduced -> original
  MFMorphism proj;  // original -> reduced
  HomotopyWitness h;
};
MinimalModel minimal_model(const MatrixFactorization& m);

// Complete: nullopt means f and g are not homotopic over k[x].
std::optional<HomotopyWitness> homotopy_witness(const MFMorphism& f, const MFMorphism& g);

struct Contractibility {
  bool contractible = false;
  std::optional<HomotopyWitness> witness;  // id = d h + h d
};
Contractibility is_contractible(const MatrixFactorization& m);

struct HomotopyEquivalence {
  MFMorphism inverse;
  HomotopyWitness source_witness;  // inverse o f - id_source
  HomotopyWitness target_witness;  // f o inverse - id_target
};
std::optional<HomotopyEquivalence> is_homotopy_equivalence(const MFMorphism& f);

}  // namespace cdgmf
