#include "cdgmf/io.hpp"

#include <fstream>
#include <sstream>

#include "cdgmf/errors.hpp"

namespace cdgmf {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<int>();
}

std::string string_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Side side_of(const Json& j) {
  std::string s = string_of(j, "side");
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ParseError("side must be \"left\" or \"right\"");
}

FieldSpec fieldspec_of(const Json& j) {
  try {
    return FieldSpec::parse(string_of(j, "field"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

CDGRingSpec ring_of(const Json& j) {
  FieldSpec f = fieldspec_of(j);
  return CDGRingSpec(f, poly_from_json(f, field_of(j, "w")));
}

Json ring_fields(const CDGRingSpec& r, Side s) {
  Json j;
  j["field"] = r.field.to_string();
  j["w"] = to_json(r.w);
  j["side"] = to_string(s);
  return j;
}

}  // namespace

// ---- encoding ---------------------------------------------------------------------

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const Scalar& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json_sized(const PolyMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = to_json(m);
  return j;
}

Json to_json(const FPModule& m) {
  Json j;
  j["gens"] = m.generators();
  j["rels"] = m.relations();
  j["presentation"] = to_json(m.presentation());
  return j;
}

Json to_json(const MatrixFactorization& m) {
  Json j = ring_fields(m.ring, m.side);
  j["rank0"] = m.rank0;
  j["rank1"] = m.rank1;
  j["d0"] = to_json(m.d0);
  j["d1"] = to_json(m.d1);
  return j;
}

Json to_json(const FPCDGModule& m) {
  Json j = ring_fields(m.ring, m.side);
  j["gens0"] = m.generators(0);
  j["gens1"] = m.generators(1);
  j["rels0"] = m.comp0.relations();
  j["rels1"] = m.comp1.relations();
  j["pres0"] = to_json(m.comp0.presentation());
  j["pres1"] = to_json(m.comp1.presentation());
  j["d0"] = to_json(m.d0);
  j["d1"] = to_json(m.d1);
  return j;
}

Json to_json(const MFMorphism& f) {
  Json j;
  j["source"] = to_json(f.source);
  j["target"] = to_json(f.target);
  j["f0"] = to_json(f.f0);
  j["f1"] = to_json(f.f1);
  return j;
}

Json to_json(const FPMorphism& f) {
  Json j;
  j["source"] = to_json(f.source);
  j["target"] = to_json(f.target);
  j["f0"] = to_json(f.f0);
  j["f1"] = to_json(f.f1);
  return j;
}

Json to_json(const CDGComplex& c) {
  Json j;
  j["start"] = c.start;
  Json terms = Json::array(), maps = Json::array();
  for (const auto& t : c.terms) terms.push_back(to_json(t));
  for (const auto& m : c.maps) {
    Json e;
    e["f0"] = to_json(m.f0);
    e["f1"] = to_json(m.f1);
    maps.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  j["maps"] = std::move(maps);
  return j;
}

Json to_json(const PeriodicComplex& c) {
  Json j;
  j["C0"] = to_json(c.C0);
  j["C1"] = to_json(c.C1);
  j["e0"] = to_json_sized(c.e0);
  j["e1"] = to_json_sized(c.e1);
  return j;
}

namespace {

Json module_summary(const FPModule& m) {
  Json j;
  j["free_rank"] = m.free_rank();
  Json t = Json::array();
  for (const Poly& p : m.torsion_factors()) t.push_back(to_json(p));
  j["torsion"] = std::move(t);
  return j;
}

}  // namespace

Json to_json(const CohomologyPair& c) {
  Json j;
  j["finite"] = c.finite;
  j["h0_dim"] = c.finite ? Json(c.dim0) : Json(nullptr);
  j["h1_dim"] = c.finite ? Json(c.dim1) : Json(nullptr);
  j["H0"] = module_summary(c.H0);
  j["H1"] = module_summary(c.H1);
  return j;
}

Json to_json(const HomotopyWitness& h) {
  Json j;
  j["h0"] = to_json_sized(h.h0);
  j["h1"] = to_json_sized(h.h1);
  return j;
}

Json to_json(const Resolution& r) {
  Json j;
  j["target"] = to_json(r.target);
  j["P0"] = to_json(r.P0);
  j["P1"] = to_json(r.P1);
  j["epi"] = Json{{"f0", to_json(r.epi.f0)}, {"f1", to_json(r.epi.f1)}};
  j["incl"] = Json{{"f0", to_json(r.incl.f0)}, {"f1", to_json(r.incl.f1)}};
  return j;
}

Json to_json(const XiResult& x) {
  Json j;
  j["xi"] = to_json(x.xi);
  Json prov;
  prov["resolution"] = to_json(x.resolution);
  prov["Q0"] = to_json(x.Q0);
  prov["Q1"] = to_json(x.Q1);
  prov["dual_incl"] = Json{{"f0", to_json(x.dual_incl.f0)}, {"f1", to_json(x.dual_incl.f1)}};
  j["provenance"] = std::move(prov);
  return j;
}

// ---- decoding ---------------------------------------------------------------------

Poly poly_from_json(FieldSpec f, const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
  std::vector<Scalar> c;
  for (const Json& e : j) {
    if (!e.is_string()) throw ParseError("coefficients must be strings");
    try {
      c.push_back(Scalar::parse(f, e.get<std::string>()));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(ex.what());
    }
  }
  return Poly(f, std::move(c));
}

PolyMatrix matrix_from_json(FieldSpec f, const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError("matrix must have " + std::to_string(rows) + " rows");
  PolyMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("matrix row must have " + std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k) m(i, k) = poly_from_json(f, row[static_cast<std::size_t>(k)]);
  }
  return m;
}

PolyMatrix sized_matrix_from_json(FieldSpec f, const Json& j) {
  return matrix_from_json(f, field_of(j, "entries"), int_of(j, "rows"), int_of(j, "cols"));
}

FPModule fpmodule_from_json(FieldSpec f, const Json& j) {
  return FPModule(matrix_from_json(f, field_of(j, "presentation"), int_of(j, "gens"), int_of(j, "rels")));
}

MatrixFactorization mf_from_json(const Json& j) {
  CDGRingSpec r = ring_of(j);
  Side s = side_of(j);
  const int r0 = int_of(j, "rank0"), r1 = int_of(j, "rank1");
  return MatrixFactorization(r, s, matrix_from_json(r.field, field_of(j, "d0"), r1, r0),
                             matrix_from_json(r.field, field_of(j, "d1"), r0, r1));
}

FPCDGModule fpcdg_from_json(const Json& j) {
  CDGRingSpec r = ring_of(j);
  Side s = side_of(j);
  const int g0 = int_of(j, "gens0"), g1 = int_of(j, "gens1");
  FPModule c0(matrix_from_json(r.field, field_of(j, "pres0"), g0, int_of(j, "rels0")));
  FPModule c1(matrix_from_json(r.field, field_of(j, "pres1"), g1, int_of(j, "rels1")));
  return FPCDGModule(r, s, c0, c1, matrix_from_json(r.field, field_of(j, "d0"), g1, g0),
                     matrix_from_json(r.field, field_of(j, "d1"), g0, g1));
}

MFMorphism mf_morphism_from_json(const Json& j) {
  MatrixFactorization s = mf_from_json(field_of(j, "source")), t = mf_from_json(field_of(j, "target"));
  FieldSpec f = s.field();
  return {s, t, matrix_from_json(f, field_of(j, "f0"), t.rank0, s.rank0),
          matrix_from_json(f, field_of(j, "f1"), t.rank1, s.rank1)};
}

FPMorphism fp_morphism_from_json(const Json& j) {
  FPCDGModule s = fpcdg_from_json(field_of(j, "source")), t = fpcdg_from_json(field_of(j, "target"));
  FieldSpec f = s.field();
  return {s, t, matrix_from_json(f, field_of(j, "f0"), t.generators(0), s.generators(0)),
          matrix_from_json(f, field_of(j, "f1"), t.generators(1), s.generators(1))};
}

CDGComplex complex_from_json(const Json& j) {
  CDGComplex c;
  const Json& st = field_of(j, "start");
  if (!st.is_number_integer()) throw ParseError("field \"start\" must be an integer");
  c.start = st.get<int>();
  const Json& terms = field_of(j, "terms");
  const Json& maps = field_of(j, "maps");
  if (!terms.is_array() || !maps.is_array()) throw ParseError("terms and maps must be arrays");
  for (const Json& t : terms) c.terms.push_back(mf_from_json(t));
  if (maps.size() + 1 != terms.size() && !(terms.empty() && maps.empty()))
    throw ParseError("a complex with k terms has k - 1 maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const MatrixFactorization& s = c.terms[i];
    const MatrixFactorization& t = c.terms[i + 1];
    FieldSpec f = s.field();
    c.maps.push_back({s, t, matrix_from_json(f, field_of(maps[i], "f0"), t.rank0, s.rank0),
                      matrix_from_json(f, field_of(maps[i], "f1"), t.rank1, s.rank1)});
  }
  return c;
}

// ---- instance files ---------------------------------------------------------------

Json instance(const std::string& kind, Json object) {
  Json j;
  j["version"] = kFormatVersion;
  j["kind"] = kind;
  j["object"] = std::move(object);
  return j;
}

Json instance(const MatrixFactorization& m) { return instance("mf", to_json(m)); }
Json instance(const FPCDGModule& m) { return instance("fpcdg", to_json(m)); }
Json instance(const MFMorphism& f) { return instance("mf_morphism", to_json(f)); }
Json instance(const FPMorphism& f) { return instance("fp_morphism", to_json(f)); }
Json instance(const CDGComplex& c) { return instance("complex", to_json(c)); }

Instance parse_instance(const Json& j) {
  const Json& v = field_of(j, "version");
  if (!v.is_number_integer() || v.get<long long>() != kFormatVersion)
    throw ParseError("unsupported format version (expected " + std::to_string(kFormatVersion) + ")");
  std::string kind = string_of(j, "kind");
  const Json& o = field_of(j, "object");
  try {
    if (kind == "mf") return {kind, mf_from_json(o)};
    if (kind == "fpcdg") return {kind, fpcdg_from_json(o)};
    if (kind == "mf_morphism") return {kind, mf_morphism_from_json(o)};
    if (kind == "fp_morphism") return {kind, fp_morphism_from_json(o)};
    if (kind == "complex") return {kind, complex_from_json(o)};
    if (kind == "xi_result") return {"mf", mf_from_json(field_of(o, "xi"))};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown object kind \"" + kind + "\"");
}

Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return parse_instance(j);
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

MatrixFactorization as_mf(const Instance& i) {
  if (auto* m = std::get_if<MatrixFactorization>(&i.value)) return *m;
  if (auto* n = std::get_if<FPCDGModule>(&i.value)) {
    if (n->has_free_components()) return n->to_mf();
  }
  throw ParseError("expected a matrix factorization, got " + i.kind);
}

FPCDGModule as_fpcdg(const Instance& i) {
  if (auto* n = std::get_if<FPCDGModule>(&i.value)) return *n;
  if (auto* m = std::get_if<MatrixFactorization>(&i.value)) return FPCDGModule::from_mf(*m);
  throw ParseError("expected a CDG-module, got " + i.kind);
}

MFMorphism as_mf_morphism(const Instance& i) {
  if (auto* m = std::get_if<MFMorphism>(&i.value)) return *m;
  throw ParseError("expected a morphism of matrix factorizations, got " + i.kind);
}

FPMorphism as_fp_morphism(const Instance& i) {
  if (auto* m = std::get_if<FPMorphism>(&i.value)) return *m;
  if (auto* m = std::get_if<MFMorphism>(&i.value)) return to_fp(*m);
  throw ParseError("expected a morphism, got " + i.kind);
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

std::string canonicalize(const std::string& text) {
  Instance i = parse_instance(text);
  return std::visit([](const auto& v) { return serialize(instance(v)); }, i.value);
}

}  // namespace cdgmf
