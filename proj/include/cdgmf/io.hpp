#pragma once

#include <string>
#include <variant>

#include "cdgmf/complex.hpp"
#include "cdgmf/homotopy.hpp"
#include "cdgmf/resolve.hpp"
#include "json.hpp"

namespace cdgmf {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Poly& p);
Json to_json(const PolyMatrix& m);  // row-major nested arrays of coefficient arrays
Json to_json_sized(const PolyMatrix& m);  // {"rows", "cols", "entries"}
Json to_json(const FPModule& m);
Json to_json(const MatrixFactorization& m);
Json to_json(const FPCDGModule& m);
Json to_json(const MFMorphism& f);
Json to_json(const FPMorphism& f);
Json to_json(const CDGComplex& c);
Json to_json(const PeriodicComplex& c);
Json to_json(const CohomologyPair& c);
Json to_json(const HomotopyWitness& h);
Json to_json(const Resolution& r);
Json to_json(const XiResult& x);

Poly poly_from_json(FieldSpec f, const Json& j);
PolyMatrix matrix_from_json(FieldSpec f, const Json& j, int rows, int cols);
PolyMatrix sized_matrix_from_json(FieldSpec f, const Json& j);
FPModule fpmodule_from_json(FieldSpec f, const Json& j);
MatrixFactorization mf_from_json(const Json& j);
FPCDGModule fpcdg_from_json(const Json& j);
MFMorphism mf_morphism_from_json(const Json& j);
FPMorphism fp_morphism_from_json(const Json& j);
CDGComplex complex_from_json(const Json& j);

// {"version": 1, "kind": ..., "object": ...}
Json instance(const std::string& kind, Json object);
Json instance(const MatrixFactorization& m);
Json instance(const FPCDGModule& m);
Json instance(const MFMorphism& f);
Json instance(const FPMorphism& f);
Json instance(const CDGComplex& c);

using InstanceValue = std::variant<MatrixFactorization, FPCDGModule, MFMorphism, FPMorphism, CDGComplex>;
struct Instance {
  std::string kind;
  InstanceValue value;
};
// Accepts kinds mf, fpcdg, mf_morphism, fp_morphism, complex; an xi_result yields its xi.
Instance parse_instance(const Json& j);
Instance parse_instance(const std::string& text);
Instance read_instance(const std::string& path);

// Objects as the operations expect them; an MF is accepted where an FPCDGModule is required.
MatrixFactorization as_mf(const Instance& i);
FPCDGModule as_fpcdg(const Instance& i);
MFMorphism as_mf_morphism(const Instance& i);
FPMorphism as_fp_morphism(const Instance& i);

// Two-space indentation, insertion-ordered keys, trailing newline.
std::string serialize(const Json& j);
// serialize(parse_instance(text)) on the canonical re-encoding.
std::string canonicalize(const std::string& text);

}  // namespace cdgmf
