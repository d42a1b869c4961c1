#pragma once

#include <cstdint>
#include <random>

#include "cdgmf/cdg.hpp"

namespace cdgmf {

// Seeded source of valid instances. Every object it returns passes validate.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  FieldSpec field();            // Q or one of a few small primes
  CDGRingSpec ring(FieldSpec f, int min_n = 1, int max_n = 6);  // w = x^n
  Poly poly(FieldSpec f, int max_deg, int height = 2);
  // Product of random elementary matrices; exact inverse returned alongside.
  std::pair<PolyMatrix, PolyMatrix> unimodular(FieldSpec f, int n, int steps = 4);

  // d0 = A diag(x^a_i) B with A, B unimodular; d1 solved from d1 d0 = +-w.
  MatrixFactorization mf(const CDGRingSpec& ring, Side side, int min_rank, int max_rank);
  // Random closed map: a small combination of a basis of degree-0 cocycles.
  MFMorphism closed_morphism(const MatrixFactorization& L, const MatrixFactorization& M);
  // Cokernel of a closed map between MFs, possibly plus a summand with zero differential.
  FPCDGModule fpcdg(const CDGRingSpec& ring, Side side, int max_rank);
  // Components (R/x^a0, R/x^a1), zero differential; an exponent of 0 means no summand.
  static FPCDGModule cyclic_pair(const CDGRingSpec& ring, Side side, int a0, int a1);
  // Lift of a random closed map N -> N' via their free covers, pushed down.
  FPMorphism fp_closed_morphism(const FPCDGModule& N, const FPCDGModule& M);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// MF with d0 = x^a, d1 = x^(n-a) over w = x^n (signs per side).
MatrixFactorization classical_mf(const CDGRingSpec& ring, Side side, int a);

}  // namespace cdgmf
