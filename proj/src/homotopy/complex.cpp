#include "cdgmf/complex.hpp"

#include "cdgmf/errors.hpp"
#include "cdgmf/smith.hpp"

namespace cdgmf {

namespace {

int par(int n) { return ((n % 2) + 2) % 2; }

// Generator-level data of a CDG-module: generator counts and d matrices.
struct GenData {
  FieldSpec field;
  int n[2];
  const PolyMatrix* d[2];
};

GenData gen_data(const MatrixFactorization& m) { return {m.field(), {m.rank0, m.rank1}, {&m.d0, &m.d1}}; }
GenData gen_data(const FPCDGModule& m) {
  return {m.field(), {m.generators(0), m.generators(1)}, {&m.d0, &m.d1}};
}

// Matrix of d: Hom^deg(L, M) -> Hom^{deg+1}(L, M) on the ambient (free) Hom spaces.
PolyMatrix hom_differential(const GenData& L, const GenData& M, int deg) {
  FieldSpec f = L.field;
  auto size = [&](int a, int dg) { return M.n[par(a + dg)] * L.n[par(a)]; };
  auto offset = [&](int a, int dg) { return a == 0 ? 0 : size(0, dg); };
  const int rows = size(0, deg + 1) + size(1, deg + 1);
  const int cols = size(0, deg) + size(1, deg);
  PolyMatrix E(f, rows, cols);
  const Poly sign = Poly::constant(f, deg % 2 == 0 ? -1 : 1);  // -(-1)^deg
  for (int a = 0; a < 2; ++a) {
    const int b = par(a + deg);
    const int col = offset(a, deg);
    // d_M o f lands in Hom(L_a, M_{b+1}).
    E.set_block(offset(a, deg + 1), col, kron(*M.d[b], PolyMatrix::identity(f, L.n[a])));
    // f o d_L lands in Hom(L_{a+1}, M_b).
    E.set_block(offset(par(a + 1), deg + 1), col,
                sign * kron(PolyMatrix::identity(f, M.n[b]), L.d[par(a + 1)]->transpose()));
  }
  return E;
}

// Relations of N_a (x) M_b: both factors' relations tensored with identities.
PolyMatrix tensor_relations(const FPModule& A, const FPModule& B) {
  FieldSpec f = A.field();
  return hstack(kron(A.presentation(), PolyMatrix::identity(f, B.generators())),
                kron(PolyMatrix::identity(f, A.generators()), B.presentation()));
}

}  // namespace

bool squares_to_zero(const PeriodicComplex& c) {
  return c.C0.contains_in_relations(c.e1 * c.e0) && c.C1.contains_in_relations(c.e0 * c.e1);
}

PeriodicComplex hom_complex(const MatrixFactorization& L, const MatrixFactorization& M) {
  if (!(L.ring == M.ring) || L.side != M.side) throw RingMismatch("hom_complex needs same ring and side");
  GenData l = gen_data(L), m = gen_data(M);
  PeriodicComplex c;
  c.e0 = hom_differential(l, m, 0);
  c.e1 = hom_differential(l, m, 1);
  c.C0 = FPModule::free(L.field(), c.e0.cols());
  c.C1 = FPModule::free(L.field(), c.e1.cols());
  return c;
}

PeriodicComplex hom_complex(const FPCDGModule& L, const MatrixFactorization& M) {
  if (!(L.ring == M.ring) || L.side != M.side) throw RingMismatch("hom_complex needs same ring and side");
  if (L.has_free_components()) return hom_complex(L.to_mf(), M);
  FieldSpec f = L.field();
  GenData l = gen_data(L), m = gen_data(M);
  // Basis of {F : F * A = 0} inside each ambient block, stacked per degree.
  PolyMatrix basis[2];
  for (int deg = 0; deg < 2; ++deg) {
    PolyMatrix b0 = kernel_basis(kron(PolyMatrix::identity(f, M.rank(deg)), L.comp0.presentation().transpose()));
    PolyMatrix b1 =
        kernel_basis(kron(PolyMatrix::identity(f, M.rank(deg + 1)), L.comp1.presentation().transpose()));
    basis[deg] = block_diag(b0, b1);
  }
  PeriodicComplex c;
  for (int deg = 0; deg < 2; ++deg) {
    PolyMatrix E = hom_differential(l, m, deg) * basis[deg];
    auto sol = solve_linear(basis[par(deg + 1)], E);
    if (!sol) throw InternalAssertionFailure("Hom differential leaves the well-defined maps");
    (deg == 0 ? c.e0 : c.e1) = sol->particular;
  }
  c.C0 = FPModule::free(f, basis[0].cols());
  c.C1 = FPModule::free(f, basis[1].cols());
  return c;
}

PeriodicComplex tensor_complex(const FPCDGModule& N, const FPCDGModule& M) {
  if (!(N.ring == M.ring)) throw RingMismatch("tensor_complex needs the same ring");
  if (N.side != Side::right || M.side != Side::left)
    throw RingMismatch("tensor_complex needs a right module and a left module");
  FieldSpec f = N.field();
  GenData n = gen_data(N), m = gen_data(M);
  auto size = [&](int a, int dg) { return n.n[a] * m.n[par(dg - a)]; };
  auto offset = [&](int a, int dg) { return a == 0 ? 0 : size(0, dg); };
  PeriodicComplex c;
  for (int deg = 0; deg < 2; ++deg) {
    PolyMatrix E(f, size(0, deg + 1) + size(1, deg + 1), size(0, deg) + size(1, deg));
    for (int a = 0; a < 2; ++a) {
      const int b = par(deg - a);
      const int col = offset(a, deg);
      // d_N(y) (x) x lands in N_{a+1} (x) M_b.
      E.set_block(offset(par(a + 1), deg + 1), col, kron(*n.d[a], PolyMatrix::identity(f, m.n[b])));
      // (-1)^a y (x) d_M(x) lands in N_a (x) M_{b+1}.
      Poly s = Poly::constant(f, a == 0 ? 1 : -1);
      E.set_block(offset(a, deg + 1), col, s * kron(PolyMatrix::identity(f, n.n[a]), *m.d[b]));
    }
    (deg == 0 ? c.e0 : c.e1) = E;
  }
  c.C0 = FPModule(block_diag(tensor_relations(N.comp0, M.comp0), tensor_relations(N.comp1, M.comp1)));
  c.C1 = FPModule(block_diag(tensor_relations(N.comp0, M.comp1), tensor_relations(N.comp1, M.comp0)));
  return c;
}

PeriodicComplex tensor_complex(const MatrixFactorization& N, const MatrixFactorization& M) {
  return tensor_complex(FPCDGModule::from_mf(N), FPCDGModule::from_mf(M));
}

namespace {

// ker(e_out) / im(e_in) at a free spot, from invariant factors only.
FPModule free_cohomology(int rank_here, const PolyMatrix& e_out, const PolyMatrix& e_in) {
  FieldSpec f = e_out.field();
  const int r_out = rank(e_out);
  auto inv = invariant_factors(e_in);
  std::vector<Poly> torsion;
  for (auto& d : inv)
    if (!d.is_unit()) torsion.push_back(d);
  const int free_rank = rank_here - r_out - static_cast<int>(inv.size());
  if (free_rank < 0) throw InternalAssertionFailure("complex does not square to zero");
  return FPModule::from_invariants(f, free_rank, torsion);
}

// General case: preimage of the relations under e_out, modulo relations and im e_in.
FPModule fp_cohomology(const FPModule& here, const FPModule& next, const PolyMatrix& e_out,
                       const PolyMatrix& e_in) {
  Submodule ker = fp_kernel(e_out, here, next);
  if (ker.basis.cols() == 0) return ker.module;
  auto sol = solve_linear(ker.basis, hstack(here.presentation(), e_in));
  if (!sol) throw InternalAssertionFailure("image of the incoming map is not in the kernel");
  return FPModule(sol->particular);
}

}  // namespace

CohomologyPair cohomology(const PeriodicComplex& c) {
  CohomologyPair r;
  if (c.has_free_components()) {
    r.H0 = free_cohomology(c.C0.generators(), c.e0, c.e1);
    r.H1 = free_cohomology(c.C1.generators(), c.e1, c.e0);
  } else {
    r.H0 = fp_cohomology(c.C0, c.C1, c.e0, c.e1);
    r.H1 = fp_cohomology(c.C1, c.C0, c.e1, c.e0);
  }
  auto d0 = r.H0.k_dimension(), d1 = r.H1.k_dimension();
  r.finite = d0.has_value() && d1.has_value();
  r.dim0 = d0.value_or(0);
  r.dim1 = d1.value_or(0);
  return r;
}

PolyMatrix vec_even(const PolyMatrix& f0, const PolyMatrix& f1) {
  FieldSpec f = f0.field();
  PolyMatrix v(f, f0.rows() * f0.cols() + f1.rows() * f1.cols(), 1);
  int k = 0;
  for (const PolyMatrix* m : {&f0, &f1})
    for (int i = 0; i < m->rows(); ++i)
      for (int j = 0; j < m->cols(); ++j) v(k++, 0) = (*m)(i, j);
  return v;
}

PolyMatrix vec_odd(const PolyMatrix& h0, const PolyMatrix& h1) { return vec_even(h0, h1); }

namespace {

PolyMatrix take(const PolyMatrix& v, int& k, int rows, int cols) {
  PolyMatrix m(v.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v(k++, 0);
  return m;
}

}  // namespace

GradedMap unvec_even(const PolyMatrix& v, const MatrixFactorization& L, const MatrixFactorization& M) {
  int k = 0;
  GradedMap g;
  g.m0 = take(v, k, M.rank0, L.rank0);
  g.m1 = take(v, k, M.rank1, L.rank1);
  return g;
}

GradedMap unvec_odd(const PolyMatrix& v, const MatrixFactorization& L, const MatrixFactorization& M) {
  int k = 0;
  GradedMap g;
  g.m0 = take(v, k, M.rank1, L.rank0);
  g.m1 = take(v, k, M.rank0, L.rank1);
  return g;
}

}  // namespace cdgmf
