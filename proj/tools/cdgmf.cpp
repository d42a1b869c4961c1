#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cdgmf/errors.hpp"
#include "cdgmf/generators.hpp"
#include "cdgmf/verify.hpp"

using namespace cdgmf;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kMalformed = 2, kInternal = 3 };

struct Common {
  std::string out;
  std::string field = "Q";
  std::string w;
  std::string side = "left";
  std::uint64_t seed = 1;
};

Json g_result;
int g_code = kOk;

void emit(Json j, int code = kOk) {
  g_result = std::move(j);
  g_code = code;
}

FieldSpec parse_field(const std::string& s) {
  try {
    return FieldSpec::parse(s);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

// "0,0,1" lowest degree first.
Poly parse_w(FieldSpec f, const std::string& s) {
  if (s.empty()) throw ParseError("--w is required");
  Json coeffs = Json::array();
  std::stringstream ss(s);
  std::string c;
  while (std::getline(ss, c, ',')) coeffs.push_back(c);
  return poly_from_json(f, coeffs);
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ParseError("--side must be left or right");
}

CDGRingSpec ring_of(const Common& c) {
  FieldSpec f = parse_field(c.field);
  return CDGRingSpec(f, parse_w(f, c.w));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with curved DG-modules of matrix-factorization type over k[x]"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* s) {
    s->add_option("--out", c.out, "Write JSON here instead of stdout");
  };
  auto ring_opts = [&](CLI::App* s) {
    s->add_option("--field", c.field, "Q or Fp:<p>");
    s->add_option("--w", c.w, "Potential coefficients, lowest degree first, comma separated")->required();
    s->add_option("--side", c.side, "left or right");
  };

  // new
  std::string kind = "mf";
  int rank = 2, a = 1, a0 = 1, a1 = 1;
  auto* s_new = app.add_subcommand("new", "Generate an instance");
  common(s_new);
  ring_opts(s_new);
  s_new->add_option("--kind", kind, "mf | classical | fpcdg | cyclic");
  s_new->add_option("--seed", c.seed);
  s_new->add_option("--rank", rank, "Maximal rank for random instances");
  s_new->add_option("--a", a, "Exponent for classical");
  s_new->add_option("--a0", a0, "Exponent of the even cyclic component");
  s_new->add_option("--a1", a1, "Exponent of the odd cyclic component");
  s_new->callback([&] {
    CDGRingSpec R = ring_of(c);
    Side side = parse_side(c.side);
    InstanceGenerator gen(c.seed);
    if (kind == "mf") return emit(instance(gen.mf(R, side, 1, rank)));
    if (kind == "classical") return emit(instance(classical_mf(R, side, a)));
    if (kind == "fpcdg") return emit(instance(gen.fpcdg(R, side, rank)));
    if (kind == "cyclic") return emit(instance(InstanceGenerator::cyclic_pair(R, side, a0, a1)));
    throw ParseError("unknown --kind " + kind);
  });

  std::string file, file2;
  auto* s_validate = app.add_subcommand("validate", "Check the CDG axioms or closedness");
  common(s_validate);
  s_validate->add_option("file", file)->required();
  s_validate->callback([&] {
    Json j = validation_report(read_instance(file));
    const bool ok = j["valid"].get<bool>();
    emit(j, ok ? kOk : kCheckFailed);
  });

  int n = 1;
  auto* s_shift = app.add_subcommand("shift", "Shift an object or morphism");
  common(s_shift);
  s_shift->add_option("file", file)->required();
  s_shift->add_option("--n", n);
  s_shift->callback([&] {
    Instance in = read_instance(file);
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, CDGComplex>) {
            throw ParseError("shift applies to objects and morphisms");
          } else {
            emit(instance(shift(v, n)));
          }
        },
        in.value);
  });

  auto* s_sum = app.add_subcommand("sum", "Direct sum of two objects");
  common(s_sum);
  s_sum->add_option("a", file)->required();
  s_sum->add_option("b", file2)->required();
  s_sum->callback([&] {
    Instance x = read_instance(file), y = read_instance(file2);
    if (x.kind == "mf" && y.kind == "mf") return emit(instance(direct_sum(as_mf(x), as_mf(y))));
    emit(instance(direct_sum(as_fpcdg(x), as_fpcdg(y))));
  });

  auto* s_cone = app.add_subcommand("cone", "Cone of a closed morphism");
  common(s_cone);
  s_cone->add_option("file", file)->required();
  s_cone->callback([&] {
    Instance in = read_instance(file);
    if (in.kind == "mf_morphism") return emit(instance(cone(as_mf_morphism(in)).cone));
    emit(instance(cone(as_fp_morphism(in)).cone));
  });

  int r0 = 1, r1 = 0;
  for (const char* name : {"gplus", "gminus"}) {
    auto* s = app.add_subcommand(name, std::string(name) + " of a free graded module");
    common(s);
    ring_opts(s);
    s->add_option("--r0", r0);
    s->add_option("--r1", r1);
    const bool plus = std::string(name) == "gplus";
    s->callback([&, plus] {
      CDGRingSpec R = ring_of(c);
      Side side = parse_side(c.side);
      emit(instance(plus ? g_plus(R, side, r0, r1).module : g_minus(R, side, r0, r1).module));
    });
  }

  std::string left, right, of = "hom";
  auto* s_hom = app.add_subcommand("hom", "Hom complex");
  common(s_hom);
  s_hom->add_option("--left", left)->required();
  s_hom->add_option("--right", right)->required();
  s_hom->callback([&] { emit(to_json(hom_complex(read_instance(left), read_instance(right)))); });

  auto* s_tensor = app.add_subcommand("tensor", "Tensor complex of a right and a left module");
  common(s_tensor);
  s_tensor->add_option("--left", left)->required();
  s_tensor->add_option("--right", right)->required();
  s_tensor->callback([&] {
    emit(to_json(tensor_complex(as_fpcdg(read_instance(left)), as_fpcdg(read_instance(right)))));
  });

  auto* s_cohom = app.add_subcommand("cohom", "Cohomology of a hom or tensor complex");
  common(s_cohom);
  s_cohom->add_option("--of", of, "hom | tensor");
  s_cohom->add_option("--left", left)->required();
  s_cohom->add_option("--right", right)->required();
  s_cohom->callback([&] {
    Instance l = read_instance(left), r = read_instance(right);
    if (of == "hom") return emit(to_json(cohomology(hom_complex(l, r))));
    if (of == "tensor") return emit(to_json(cohomology(tensor_complex(as_fpcdg(l), as_fpcdg(r)))));
    throw ParseError("--of must be hom or tensor");
  });

  bool emit_witness = false;
  auto* s_homotopy = app.add_subcommand("homotopy", "Find h with f - g = dh + hd");
  common(s_homotopy);
  s_homotopy->add_option("f", file)->required();
  s_homotopy->add_option("g", file2)->required();
  s_homotopy->add_flag("--emit-witness", emit_witness);
  s_homotopy->callback([&] {
    auto h = homotopy_witness(as_mf_morphism(read_instance(file)), as_mf_morphism(read_instance(file2)));
    Json j{{"homotopic", h.has_value()}};
    if (h && emit_witness) j["witness"] = to_json(*h);
    emit(j, h ? kOk : kCheckFailed);
  });

  auto* s_contr = app.add_subcommand("contractible", "Is the identity null-homotopic");
  common(s_contr);
  s_contr->add_option("file", file)->required();
  s_contr->add_flag("--emit-witness", emit_witness);
  s_contr->callback([&] {
    Contractibility ct = is_contractible(as_mf(read_instance(file)));
    Json j{{"contractible", ct.contractible}};
    if (ct.witness && emit_witness) j["witness"] = to_json(*ct.witness);
    emit(j, ct.contractible ? kOk : kCheckFailed);
  });

  auto* s_resolve = app.add_subcommand("resolve", "Two-term graded-free resolution");
  common(s_resolve);
  s_resolve->add_option("file", file)->required();
  s_resolve->callback([&] { emit(instance("resolution", to_json(resolve(as_fpcdg(read_instance(file)))))); });

  auto* s_xi = app.add_subcommand("xi", "Totalized dual of the resolution");
  common(s_xi);
  s_xi->add_option("file", file)->required();
  s_xi->callback([&] { emit(instance("xi_result", to_json(xi(as_fpcdg(read_instance(file)))))); });

  auto* s_pair = app.add_subcommand("pair", "Compare Hom(xi(N), F) with N (x) F");
  common(s_pair);
  s_pair->add_option("--N", left)->required();
  s_pair->add_option("--F", right)->required();
  s_pair->callback([&] {
    CheckReport r = check_pairing(as_fpcdg(read_instance(left)), as_mf(read_instance(right)));
    emit(to_json(r), r.pass ? kOk : kCheckFailed);
  });

  auto* s_dual = app.add_subcommand("duality", "Compare Hom(xi(N), xi(K)) with N (x) xi(K)");
  common(s_dual);
  s_dual->add_option("--N", left)->required();
  s_dual->add_option("--K", right)->required();
  s_dual->callback([&] {
    CheckReport r = check_duality(as_fpcdg(read_instance(left)), as_fpcdg(read_instance(right)));
    emit(to_json(r), r.pass ? kOk : kCheckFailed);
  });

  SelftestOptions st;
  std::string checks, report_path;
  auto* s_self = app.add_subcommand("selftest", "Run the seeded verification suite");
  common(s_self);
  s_self->add_option("--seed", st.seed);
  s_self->add_option("--count", st.count);
  s_self->add_option("--checks", checks, "Comma-separated subset of " + [] {
    std::string s;
    for (const auto& n : kSelftestChecks) s += (s.empty() ? "" : ",") + n;
    return s;
  }());
  s_self->add_option("--json-report", report_path);
  s_self->callback([&] {
    std::stringstream ss(checks);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) st.checks.push_back(item);
    std::vector<CheckReport> reports = run_selftest(st);
    if (!report_path.empty()) {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      std::ofstream(report_path) << serialize(all);
    }
    Json summary = selftest_summary(st, reports);
    const bool ok = summary["pass"].get<bool>();
    emit(summary, ok ? kOk : kCheckFailed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  } catch (const InternalAssertionFailure& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  const std::string text = serialize(g_result);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(c.out);
    if (!o) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return kMalformed;
    }
    o << text;
  }
  return g_code;
}
