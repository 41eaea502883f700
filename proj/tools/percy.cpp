// File-driven front end: JSON objects in, deterministic reports out.
// Exit codes: 0 = success / verdict holds, 1 = negative mathematical
// verdict, 2 = input or usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "percy/json_io.hpp"

using namespace percy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "text";
  int levels = 5;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw error("malformed JSON in '" + path + "'");
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << text;
}

std::string matrix_to_text(const RatMat& m) {
  std::string s = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

// Every report is assembled as ordered JSON; text mode flattens it.
std::string render(const Json& report, const Options& opt) {
  if (opt.format == "json") return dump_canonical(report);
  std::string out;
  for (const auto& [key, value] : report.items()) {
    out += key;
    out += ": ";
    if (value.is_string())
      out += value.get<std::string>();
    else
      out += value.dump();
    out += "\n";
  }
  return out;
}

bool is_surface_json(const Json& j) { return j.contains("genus"); }
bool is_simplicial_json(const Json& j) { return j.contains("faces"); }
bool is_paracyclic_json(const Json& j) { return j.contains("t") && j.contains("faces"); }
bool is_duplicial_json(const Json& j) {
  return j.contains("extra_degeneracies") && j.contains("faces");
}
bool is_ducomplex_json(const Json& j) { return j.contains("delta") && !j.contains("faces"); }
bool is_complex_json(const Json& j) {
  return j.contains("d") && !j.contains("delta") && !j.contains("faces");
}

int cmd_validate(const Options& opt) {
  Json j = read_json_file(opt.inputs[0]);
  Json report;
  bool ok;
  if (is_surface_json(j)) {
    SurfacePervData s = surface_from_json(j);
    SurfaceReport r = validate(s);
    ok = r.ok();
    report["kind"] = "surface";
    report["valid"] = ok ? "yes" : "no";
    report["shapes"] = r.shapes_ok;
    report["handles_invertible"] = r.handles_invertible;
    report["locals_valid"] = r.locals_valid;
    report["relation_holds"] = r.relation_holds;
    if (!r.failures.empty()) report["failures"] = r.failures;
  } else {
    PervData d = perv_from_json(j);
    PervReport r = validate(d);
    ok = r.ok();
    report["kind"] = "disk";
    report["valid"] = ok ? "yes" : "no";
    if (r.shapes_ok) {
      Monodromies m = monodromies(d);
      report["T_Phi"] = matrix_to_text(m.t_phi);
      report["T_Psi"] = matrix_to_text(m.t_psi);
    }
    if (!ok) report["reason"] = r.detail;
  }
  write_text(opt.output, render(report, opt));
  return ok ? kExitOk : kExitVerdict;
}

int cmd_monodromy(const Options& opt) {
  PervData d = perv_from_json(read_json_file(opt.inputs[0]));
  PervReport r = validate(d);
  Json report;
  if (!r.shapes_ok) throw error(r.detail);
  Monodromies m = monodromies(d);
  report["valid"] = r.ok() ? "yes" : "no";
  report["T_Phi"] = matrix_to_text(m.t_phi);
  report["T_Psi"] = matrix_to_text(m.t_psi);
  write_text(opt.output, render(report, opt));
  return r.ok() ? kExitOk : kExitVerdict;
}

int cmd_half_monodromy(const Options& opt) {
  PervData d = perv_from_json(read_json_file(opt.inputs[0]));
  if (!validate(d).ok()) {
    write_text(opt.output, "invalid: " + validate(d).detail + "\n");
    return kExitVerdict;
  }
  RatMat p = half_monodromy(d);
  Monodromies m = monodromies(d);
  bool square = mat_eq(p * p, direct_sum(m.t_phi, m.t_psi));
  Json report;
  report["P"] = matrix_to_text(p);
  report["P_squared"] = matrix_to_text(p * p);
  report["equals_monodromy_block"] = square;
  write_text(opt.output, render(report, opt));
  return square ? kExitOk : kExitVerdict;
}

int cmd_dualize(const Options& opt) {
  Json j = read_json_file(opt.inputs[0]);
  Json out;
  if (is_surface_json(j)) {
    SurfacePervData s = surface_from_json(j);
    if (!validate(s).ok()) {
      write_text(opt.output, "invalid surface datum\n");
      return kExitVerdict;
    }
    out = to_json(dualize(s));
  } else {
    PervData d = perv_from_json(j);
    if (!validate(d).ok()) {
      write_text(opt.output, "invalid: " + validate(d).detail + "\n");
      return kExitVerdict;
    }
    out = to_json(dualize(d));
  }
  write_text(opt.output, dump_canonical(out));
  return kExitOk;
}

int cmd_nerve(const Options& opt) {
  PervData d = perv_from_json(read_json_file(opt.inputs[0]));
  if (!validate(d).ok()) {
    write_text(opt.output, "invalid: " + validate(d).detail + "\n");
    return kExitVerdict;
  }
  ParacyclicVec x = paracyclic_nerve(d, opt.levels);
  write_text(opt.output, dump_canonical(to_json(x)));
  return kExitOk;
}

int cmd_segal(const Options& opt) {
  Json j = read_json_file(opt.inputs[0]);
  SimplicialVec x = is_paracyclic_json(j)
                        ? static_cast<SimplicialVec>(paracyclic_from_json(j))
                        : simplicial_from_json(j);
  bool ok = check_segal(x);
  Json report;
  report["segal"] = ok ? "holds" : "fails";
  write_text(opt.output, render(report, opt));
  return ok ? kExitOk : kExitVerdict;
}

int cmd_check_relations(const Options& opt) {
  Json j = read_json_file(opt.inputs[0]);
  RelationReport r;
  std::string kind;
  if (is_paracyclic_json(j)) {
    r = check_relations(paracyclic_from_json(j));
    kind = "paracyclic";
  } else if (is_duplicial_json(j)) {
    r = check_duplicial_relations(duplicial_from_json(j));
    kind = "duplicial";
  } else {
    r = check_relations(simplicial_from_json(j));
    kind = "simplicial";
  }
  Json report;
  report["kind"] = kind;
  report["relations"] = r.ok() ? "hold" : "fail";
  if (!r.ok()) report["violations"] = r.violations;
  write_text(opt.output, render(report, opt));
  return r.ok() ? kExitOk : kExitVerdict;
}

int cmd_extract(const Options& opt) {
  ParacyclicVec x = paracyclic_from_json(read_json_file(opt.inputs[0]));
  if (!check_relations(x).ok() || !check_segal(x)) {
    write_text(opt.output, "invalid: relations or Segal conditions fail\n");
    return kExitVerdict;
  }
  write_text(opt.output, dump_canonical(to_json(extract_perv(x))));
  return kExitOk;
}

int cmd_dold_kan(const Options& opt) {
  Json j = read_json_file(opt.inputs[0]);
  if (is_simplicial_json(j)) {
    SimplicialVec x = is_paracyclic_json(j)
                          ? static_cast<SimplicialVec>(paracyclic_from_json(j))
                          : simplicial_from_json(j);
    write_text(opt.output, dump_canonical(to_json(dold_kan_chains(x))));
    return kExitOk;
  }
  if (is_complex_json(j)) {
    Complex e = complex_from_json(j);
    write_text(opt.output, dump_canonical(to_json(dold_kan_nerve(e, opt.levels))));
    return kExitOk;
  }
  throw error("dold-kan: input is neither a simplicial object nor a complex");
}

int cmd_ducomplex(const Options& opt) {
  Json j = read_json_file(opt.inputs[0]);
  DuplicialVec y;
  if (is_paracyclic_json(j))
    y = duplicial_restriction(paracyclic_from_json(j));
  else if (is_duplicial_json(j))
    y = duplicial_from_json(j);
  else
    throw error("ducomplex: input is neither paracyclic nor duplicial");
  try {
    write_text(opt.output, dump_canonical(to_json(to_ducomplex(y))));
  } catch (const error& e) {
    write_text(opt.output, std::string("invalid: ") + e.what() + "\n");
    return kExitVerdict;
  }
  return kExitOk;
}

int cmd_criterion(const Options& opt) {
  Ducomplex b = ducomplex_from_json(read_json_file(opt.inputs[0]));
  CriterionReport r = paracyclicity_criterion(b);
  Json report;
  report["paracyclic"] = r.all() ? "yes" : "no";
  Json levels = Json::array();
  for (bool v : r.invertible) levels.push_back(v);
  report["levels"] = std::move(levels);
  write_text(opt.output, render(report, opt));
  return r.all() ? kExitOk : kExitVerdict;
}

int cmd_euler(const Options& opt) {
  SurfacePervData s = surface_from_json(read_json_file(opt.inputs[0]));
  SurfaceReport r = validate(s);
  Json report;
  if (!r.ok()) {
    report["valid"] = "no";
    report["failures"] = r.failures;
    write_text(opt.output, render(report, opt));
    return kExitVerdict;
  }
  report["euler_characteristic"] = euler_characteristic(s);
  write_text(opt.output, render(report, opt));
  return kExitOk;
}

int cmd_hom(const Options& opt) {
  Json ja = read_json_file(opt.inputs[0]);
  Json jb = read_json_file(opt.inputs[1]);
  if (is_surface_json(ja) != is_surface_json(jb))
    throw error("hom: inputs must both be disk data or both surface data");
  Json report;
  if (is_surface_json(ja)) {
    SurfacePervData sa = surface_from_json(ja), sb = surface_from_json(jb);
    if (!validate(sa).ok() || !validate(sb).ok()) {
      write_text(opt.output, "invalid surface datum\n");
      return kExitVerdict;
    }
    auto basis = hom_space(sa, sb);
    report["dimension"] = basis.size();
    if (!opt.output.empty() || opt.format == "json") {
      Json list = Json::array();
      for (const auto& m : basis) {
        Json e;
        e["h"] = matrix_to_json(m.h);
        Json fs = Json::array();
        for (const auto& f : m.f_phi) fs.push_back(matrix_to_json(f));
        e["f_phi"] = std::move(fs);
        list.push_back(std::move(e));
      }
      report["basis"] = std::move(list);
    }
  } else {
    PervData da = perv_from_json(ja), db = perv_from_json(jb);
    if (!validate(da).ok() || !validate(db).ok()) {
      write_text(opt.output, "invalid: both inputs must be valid data\n");
      return kExitVerdict;
    }
    auto basis = hom_space(da, db);
    report["dimension"] = basis.size();
    if (!opt.output.empty() || opt.format == "json") {
      Json list = Json::array();
      for (const auto& m : basis) {
        Json e;
        e["f_phi"] = matrix_to_json(m.f_phi);
        e["f_psi"] = matrix_to_json(m.f_psi);
        list.push_back(std::move(e));
      }
      report["basis"] = std::move(list);
    }
  }
  write_text(opt.output, render(report, opt));
  return kExitOk;
}

int cmd_roundtrip(const Options& opt) {
  PervData d = perv_from_json(read_json_file(opt.inputs[0]));
  if (!validate(d).ok()) {
    write_text(opt.output, "invalid: " + validate(d).detail + "\n");
    return kExitVerdict;
  }
  ParacyclicVec x = paracyclic_nerve(d, opt.levels);
  bool extract_ok = extract_perv(x) == d;
  Complex chains = dold_kan_chains(x);
  Complex two = make_complex({d.phi, d.psi}, {rat_zero(0, d.phi), d.b});
  bool chains_ok = complex_isomorphic(chains, two);
  Ducomplex b = to_ducomplex(duplicial_restriction(x));
  bool criterion_ok = paracyclicity_criterion(b).all();
  Json report;
  report["extract_inverts_nerve"] = extract_ok;
  report["chains_match_two_term_complex"] = chains_ok;
  report["criterion_holds"] = criterion_ok;
  write_text(opt.output, render(report, opt));
  return (extract_ok && chains_ok && criterion_ok) ? kExitOk : kExitVerdict;
}

int cmd_demo(const Options& opt) {
  std::filesystem::path dir = opt.output.empty() ? "demo" : opt.output;
  std::filesystem::create_directories(dir);

  Json sky = to_json(skyscraper(1));

  RatMat two = rat_zero(1, 1);
  two(0, 0) = 2;
  Json ext = to_json(extension_by_zero(two));

  SurfacePervData sphere;
  sphere.genus = 0;
  sphere.r = 1;
  RatMat half = rat_zero(1, 1);
  half(0, 0) = rat(1, 2);
  sphere.locals.push_back(extension_by_zero(two));
  sphere.locals.push_back(extension_by_zero(half));
  Json sph = to_json(checked_surface(sphere));

  write_text((dir / "skyscraper.json").string(), dump_canonical(sky));
  write_text((dir / "extension_by_zero.json").string(), dump_canonical(ext));
  write_text((dir / "sphere_two_points.json").string(), dump_canonical(sph));
  std::cout << "wrote " << (dir / "skyscraper.json").string() << "\n"
            << "wrote " << (dir / "extension_by_zero.json").string() << "\n"
            << "wrote " << (dir / "sphere_two_points.json").string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with perverse-sheaf quiver data and the paracyclic nerve"};
  app.require_subcommand(1);

  Options opt;
  struct Verb {
    const char* name;
    const char* help;
    int n_inputs;
    bool has_levels;
    int (*run)(const Options&);
  };
  const Verb verbs[] = {
      {"validate", "check a disk or surface datum", 1, false, cmd_validate},
      {"monodromy", "print T_Phi and T_Psi of a disk datum", 1, false, cmd_monodromy},
      {"half-monodromy", "print P with P^2 = diag(T_Phi, T_Psi)", 1, false,
       cmd_half_monodromy},
      {"dualize", "write the dual of a disk or surface datum", 1, false, cmd_dualize},
      {"nerve", "write the paracyclic nerve of a disk datum", 1, true, cmd_nerve},
      {"segal", "check the Segal conditions of a (para)simplicial object", 1, false,
       cmd_segal},
      {"check-relations", "verify all operator relations", 1, false, cmd_check_relations},
      {"extract", "recover the disk datum from a paracyclic nerve", 1, false, cmd_extract},
      {"dold-kan", "normalized chains of a simplicial object, or the nerve of a complex", 1,
       true, cmd_dold_kan},
      {"ducomplex", "ducomplex of a paracyclic or duplicial object", 1, false, cmd_ducomplex},
      {"criterion", "levelwise paracyclicity criterion of a ducomplex", 1, false,
       cmd_criterion},
      {"euler", "Euler characteristic of a surface datum", 1, false, cmd_euler},
      {"hom", "basis of the space of morphisms between two data", 2, false, cmd_hom},
      {"roundtrip", "nerve/extract and chains roundtrips on a disk datum", 1, true,
       cmd_roundtrip},
      {"demo", "write the worked example bundle", 0, false, cmd_demo},
  };

  int (*selected)(const Options&) = nullptr;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    if (v.n_inputs > 0)
      sub->add_option("inputs", opt.inputs, "input JSON file(s)")
          ->expected(v.n_inputs)
          ->check(CLI::ExistingFile);
    sub->add_option("--output", opt.output, "write the result here instead of stdout");
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (v.has_levels)
      sub->add_option("--levels", opt.levels, "truncation level")->check(CLI::Range(1, 12));
    sub->callback([&selected, &v]() { selected = v.run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return selected(opt);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
