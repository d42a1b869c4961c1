#include "cdgmf/fpmodule.hpp"

#include "cdgmf/errors.hpp"
#include "cdgmf/smith.hpp"

namespace cdgmf {

FPModule::FPModule(PolyMatrix presentation) : pres_(std::move(presentation)) {
  auto inv = invariant_factors(pres_);
  free_rank_ = pres_.rows() - static_cast<int>(inv.size());
  for (auto& d : inv)
    if (!d.is_unit()) torsion_.push_back(d);
}

FPModule FPModule::free(FieldSpec f, int rank) { return FPModule(PolyMatrix(f, rank, 0)); }

FPModule FPModule::cyclic(const Poly& d) {
  PolyMatrix m(d.field(), 1, 1);
  m(0, 0) = d;
  return FPModule(m);
}

FPModule FPModule::from_invariants(FieldSpec f, int free_rank, const std::vector<Poly>& torsion) {
  const int t = static_cast<int>(torsion.size());
  PolyMatrix m(f, t + free_rank, t);
  for (int i = 0; i < t; ++i) m(i, i) = torsion[static_cast<std::size_t>(i)].monic();
  return FPModule(m);
}

std::optional<long> FPModule::k_dimension() const {
  if (free_rank_ > 0) return std::nullopt;
  long d = 0;
  for (const auto& p : torsion_) d += p.degree();
  return d;
}

FPModule FPModule::normalized() const { return from_invariants(field(), free_rank_, torsion_); }

bool FPModule::same_normal_form(const FPModule& o) const {
  return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
}

bool FPModule::contains_in_relations(const PolyMatrix& v) const {
  if (v.rows() != generators()) throw DimensionMismatch("vector length differs from generator count");
  if (v.is_zero()) return true;
  return solve_linear(pres_, v).has_value();
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  return FPModule(block_diag(a.presentation(), b.presentation()));
}

bool respects_relations(const PolyMatrix& f, const FPModule& M, const FPModule& N) {
  if (f.rows() != N.generators() || f.cols() != M.generators())
    throw DimensionMismatch("map shape does not match generator counts");
  return N.contains_in_relations(f * M.presentation());
}

Submodule fp_kernel(const PolyMatrix& f, const FPModule& M, const FPModule& N) {
  if (!respects_relations(f, M, N)) throw IllDefinedMap("map does not respect relations");
  FieldSpec fs = M.field();
  const int g = M.generators();
  // v in the preimage iff (v, r) lies in ker [f | -A_N] for some r.
  PolyMatrix K = kernel_basis(hstack(f, -N.presentation()));
  PolyMatrix B = column_span_basis(K.rows_range(0, g));
  if (B.cols() == 0) return {B, FPModule::free(fs, 0)};
  auto sol = solve_linear(B, M.presentation());
  if (!sol) throw InternalAssertionFailure("relations of the source not in the kernel");
  return {B, FPModule(sol->particular)};
}

FPModule fp_cokernel(const PolyMatrix& f, const FPModule& M, const FPModule& N) {
  if (!respects_relations(f, M, N)) throw IllDefinedMap("map does not respect relations");
  return FPModule(hstack(N.presentation(), f));
}

}  // namespace cdgmf
