#pragma once

#include <optional>
#include <vector>

#include "cdgmf/matrix.hpp"

namespace cdgmf {

// Finitely presented k[x]-module R^g / im(A), A of shape g x (number of relations).
class FPModule {
 public:
  FPModule() = default;
  explicit FPModule(PolyMatrix presentation);
  static FPModule free(FieldSpec f, int rank);
  static FPModule cyclic(const Poly& d);  // R/(d)
  static FPModule from_invariants(FieldSpec f, int free_rank, const std::vector<Poly>& torsion);

  FieldSpec field() const { return pres_.field(); }
  const PolyMatrix& presentation() const { return pres_; }
  int generators() const { return pres_.rows(); }
  int relations() const { return pres_.cols(); }
  int free_rank() const { return free_rank_; }
  const std::vector<Poly>& torsion_factors() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool has_free_presentation() const { return pres_.is_zero(); }
  // k-dimension, or nullopt when infinite.
  std::optional<long> k_dimension() const;

  // Canonical presentation: diag(torsion factors) followed by free generators.
  FPModule normalized() const;
  bool same_normal_form(const FPModule& o) const;

  // Is vector v (g x c) zero in the module, columnwise?
  bool contains_in_relations(const PolyMatrix& v) const;

 private:
  PolyMatrix pres_;
  int free_rank_ = 0;
  std::vector<Poly> torsion_;
};

FPModule direct_sum(const FPModule& a, const FPModule& b);

// f: M -> N given on generators (N.generators() x M.generators()).
bool respects_relations(const PolyMatrix& f, const FPModule& M, const FPModule& N);

struct Submodule {
  PolyMatrix basis;  // free basis of the preimage submodule in R^{g(M)}
  FPModule module;   // preimage / relations, presented on `basis`
};

// The kernel of f as a module, together with the lifted generator basis.
Submodule fp_kernel(const PolyMatrix& f, const FPModule& M, const FPModule& N);
FPModule fp_cokernel(const PolyMatrix& f, const FPModule& M, const FPModule& N);

}  // namespace cdgmf
