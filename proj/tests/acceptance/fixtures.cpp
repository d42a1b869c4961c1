#include "fixtures.hpp"

#include "cdgmf/generators.hpp"

namespace cdgmf::fixtures {

std::vector<std::pair<std::string, Json>> serialize_fixtures() {
  const FieldSpec Q = FieldSpec::rationals(), F5 = FieldSpec::prime(5), F7 = FieldSpec::prime(7);
  const CDGRingSpec R3(Q, Poly::x_pow(Q, 3)), R4(Q, Poly::x_pow(Q, 4)), S4(F5, Poly::x_pow(F5, 4)),
      T2(F7, Poly::x_pow(F7, 2));
  std::vector<std::pair<std::string, Json>> out;

  MatrixFactorization M1 = classical_mf(R3, Side::left, 1);
  out.emplace_back("classical_q_n3_a1", instance(M1));

  InstanceGenerator g7(7);
  out.emplace_back("mf_f5_seed7", instance(g7.mf(S4, Side::left, 2, 3)));

  InstanceGenerator g11(11);
  out.emplace_back("fpcdg_q_seed11", instance(g11.fpcdg(R3, Side::right, 2)));

  FPCDGModule N = InstanceGenerator::cyclic_pair(R4, Side::right, 1, 2);
  out.emplace_back("cyclic_q_n4", instance(N));

  InstanceGenerator g13(13);
  MatrixFactorization L = g13.mf(R3, Side::left, 1, 2), M = g13.mf(R3, Side::left, 1, 2);
  MFMorphism f = g13.closed_morphism(L, M);
  out.emplace_back("mf_morphism_q_seed13", instance(f));

  InstanceGenerator g17(17);
  FPCDGModule A = g17.fpcdg(R3, Side::right, 1), B = g17.fpcdg(R3, Side::right, 1);
  out.emplace_back("fp_morphism_q_seed17", instance(g17.fp_closed_morphism(A, B)));

  out.emplace_back("cone_of_mf_morphism", instance(cone(f).cone));
  out.emplace_back("gplus_f7_n2", instance(g_plus(T2, Side::left, 1, 1).module));
  out.emplace_back("cohom_hom_classical", to_json(cohomology(hom_complex(M1, classical_mf(R3, Side::left, 2)))));
  out.emplace_back("xi_cyclic_q_n4", instance("xi_result", to_json(xi(N))));
  return out;
}

}  // namespace cdgmf::fixtures
