#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgmf/io.hpp"

namespace cdgmf {

// Integer comparison with its evidence. For structural checks left counts the
// certified sub-claims and right counts those attempted.
struct CheckReport {
  std::string check;
  std::string digest;
  long left = 0, right = 0;
  bool left_finite = true, right_finite = true;
  std::optional<long> oracle;  // independent value that must agree with left when present
  bool pass = false;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, PolyMatrix>> witnesses;

  bool recompute_pass() const;
};

Json to_json(const CheckReport& r);
// SHA-256 of the canonical serialization of the inputs and the seed, hex.
std::string instance_digest(const Json& inputs, std::uint64_t seed = 0);

// dim H0 Hom(xi(N), F) against dim H0 (N (x) F).
CheckReport check_pairing(const FPCDGModule& N, const MatrixFactorization& F);
// dim H0 Hom(xi(N), xi(K)) against dim H0 (N (x) xi(K)); optionally against the oracle.
CheckReport check_duality(const FPCDGModule& N, const FPCDGModule& K, bool cross_check = true);
// Oracle prediction when N and K have cyclic monomial components and zero differential.
std::optional<long> duality_oracle_value(const FPCDGModule& N, const FPCDGModule& K);
// Seeded split-exact 3-term complexes (contractible totalizations, witnesses kept)
// and Koszul-type exact complexes over w = 0 (acyclic totalizations).
CheckReport check_totalization_lemmas(std::uint64_t seed, int split_count, int bicomplex_count);
// P (x) G -> Hom(P^v, G) and Gr (x) E^v -> Hom(E, Gr) as certified chain isomorphisms.
CheckReport check_adjunction_isos(const MatrixFactorization& P, const MatrixFactorization& G,
                                  const MatrixFactorization& E, const MatrixFactorization& Gr);
// Functoriality, shift, cone and resolution-independence for f : N -> N', g : N' -> N''.
CheckReport check_xi_triangulated(const FPMorphism& f, const FPMorphism& g);

// The chain maps used by check_adjunction_isos, degree 0 and 1.
struct ChainIso {
  PolyMatrix m0, m1;
};
ChainIso tensor_to_hom_dual(const MatrixFactorization& P, const MatrixFactorization& G);
ChainIso tensor_dual_to_hom(const MatrixFactorization& Gr, const MatrixFactorization& E);

struct SelftestOptions {
  std::uint64_t seed = 1;
  int count = 50;
  std::vector<std::string> checks;  // empty = all
};
inline const std::vector<std::string> kSelftestChecks = {"pairing", "duality", "totalization", "adjunction",
                                                         "xi_triangulated"};
std::vector<CheckReport> run_selftest(const SelftestOptions& o);
// {"seed", "count", "checks": {name: {"passed", "total"}}, "pass"}
Json selftest_summary(const SelftestOptions& o, const std::vector<CheckReport>& reports);

// Hom complex of two instances; a finitely presented source uses its kernel description.
PeriodicComplex hom_complex(const Instance& source, const Instance& target);
// {"kind", "valid", "composite", "error"}; composite names the failing composite, if any.
Json validation_report(const Instance& in);

}  // namespace cdgmf
