#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rht/fano.hpp"
#include "rht/sullivan.hpp"

namespace rht::cli {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

const json& field(const json& obj, const std::string& name, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) throw InputError(where + ": missing field '" + name + "'");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string");
  return v.get<std::string>();
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

AlgebraSpec parse_algebra_json(const json& doc) {
  if (!doc.is_object()) throw InputError("algebra file: top level must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "generators" && key != "relations" && key != "formal_dimension" &&
        key != "kahler_class")
      throw InputError("algebra file: unknown field '" + key + "'");

  const json& gens = field(doc, "generators", "algebra file");
  if (!gens.is_array()) throw InputError("generators: expected an array");
  std::vector<Generator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    Generator g;
    g.name = as_string(field(gens[i], "name", where), where + ".name");
    if (!valid_name(g.name))
      throw InputError(where + ".name: \"" + g.name + "\" must match [A-Za-z][A-Za-z0-9_]*");
    g.degree = as_int(field(gens[i], "degree", where), where + ".degree");
    generators.push_back(std::move(g));
  }
  auto algebra = FreeGCA::make(std::move(generators));

  std::vector<Polynomial> relations;
  if (doc.contains("relations")) {
    const json& rels = doc["relations"];
    if (!rels.is_array()) throw InputError("relations: expected an array");
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const std::string where = "relations[" + std::to_string(i) + "]";
      try {
        relations.push_back(parse_poly(as_string(rels[i], where), algebra));
      } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.position(), where + ": " + e.what());
      }
    }
  }
  std::optional<int> m;
  if (doc.contains("formal_dimension"))
    m = as_int(doc["formal_dimension"], "formal_dimension");

  AlgebraSpec spec{Presentation(algebra, std::move(relations), m), std::nullopt};
  if (doc.contains("kahler_class")) {
    const auto name = as_string(doc["kahler_class"], "kahler_class");
    const auto idx = algebra->index_of(name);
    if (!idx) throw InputError("kahler_class: unknown generator \"" + name + "\"");
    if (algebra->generator(*idx).degree != 2)
      throw InputError("kahler_class: \"" + name + "\" must have degree 2");
    spec.kahler_class = name;
  }
  return spec;
}

AlgebraSpec parse_algebra_file(const std::string& path) {
  try {
    return parse_algebra_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.position(), path + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

HodgeDiamond parse_diamond_json(const json& doc) {
  const int n = as_int(field(doc, "n", "diamond file"), "n");
  const json& hodge = field(doc, "hodge", "diamond file");
  if (!hodge.is_array()) throw InputError("hodge: expected an array");
  std::vector<long> values;
  for (std::size_t i = 0; i < hodge.size(); ++i) {
    if (!hodge[i].is_number_integer())
      throw InputError("hodge[" + std::to_string(i) + "]: expected an integer");
    values.push_back(hodge[i].get<long>());
  }
  return HodgeDiamond::from_row_major(n, values);
}

HodgeDiamond parse_diamond_file(const std::string& path) {
  try {
    return parse_diamond_json(read_json_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

struct Common {
  bool json_out = false;
  std::optional<int> max_degree;
};

int default_max_degree(const Presentation& p, const Common& c) {
  if (c.max_degree) {
    if (*c.max_degree < 2) throw InputError("--max-degree must be >= 2");
    return *c.max_degree;
  }
  if (!p.formal_dimension())
    throw InputError("no formal_dimension in the input; pass --max-degree");
  return std::max(2, 2 * *p.formal_dimension() - 1);
}

json homotopy_json(const HomotopyTable& t) {
  json rows = json::array();
  for (const auto& [n, d] : t.dims) rows.push_back({{"degree", n}, {"dim", d}});
  return rows;
}

void render_homotopy(const json& rows, std::ostream& out) {
  for (const auto& r : rows)
    out << "pi_" << r["degree"].get<int>() << " = " << r["dim"].get<std::size_t>() << "\n";
}

json model_command(const AlgebraSpec& spec, const Common& c) {
  const int N = default_max_degree(spec.presentation, c);
  auto [model, table] = build_bigraded_model(spec.presentation, N);
  json gens = json::array();
  for (std::size_t i = 0; i < model.ambient->size(); ++i) {
    const auto& g = model.ambient->generator(i);
    gens.push_back({{"name", g.name},
                    {"degree", g.degree},
                    {"d", model.differential[i].to_string()},
                    {"image", model.to_cohomology[i].to_string()}});
  }
  return {{"command", "model"},
          {"computed_through", table.computed_through},
          {"homotopy", homotopy_json(table)},
          {"generators", gens}};
}

void render_model(const json& doc, std::ostream& out) {
  const int through = doc["computed_through"];
  out << "minimal model through degree " << through << "\n";
  render_homotopy(doc["homotopy"], out);
  out << "(pi_n = 0 for every other n <= " << through << ")\n";
  out << "generators:\n";
  for (const auto& g : doc["generators"])
    out << "  " << g["name"].get<std::string>() << "  degree " << g["degree"].get<int>()
        << "  d = " << g["d"].get<std::string>() << "\n";
}

json regularity_json(const RegularityReport& r) {
  json j = {{"regular", r.regular},
            {"reason", r.reason},
            {"socle_degree", r.socle_degree},
            {"checked_through", r.checked_through}};
  j["radical_power"] = r.radical_power ? json(*r.radical_power) : json(nullptr);
  return j;
}

json audit_json(const FHAudit& a) {
  json rows = json::array();
  for (const auto& b : a.checks)
    rows.push_back({{"name", b.name},
                    {"formula", b.formula},
                    {"lhs", b.lhs},
                    {"rhs", b.rhs},
                    {"pass", b.pass}});
  return rows;
}

json classify_command(const AlgebraSpec& spec, const Common& c) {
  const Presentation& h = spec.presentation;
  const int window = default_max_degree(h, c);
  const auto v = classify_dichotomy(h, window);
  json doc = {{"command", "classify"},
              {"verdict", to_string(v.kind)},
              {"summary", v.summary()},
              {"witness", v.witness},
              {"generator_degrees", v.generator_degrees},
              {"computed_through", v.table.computed_through},
              {"homotopy", homotopy_json(v.table)}};
  doc["fh_audit"] = v.audit ? audit_json(*v.audit) : json(nullptr);
  doc["violated_bound"] = v.violated_bound ? audit_json({0, {*v.violated_bound}})[0] : json(nullptr);
  doc["regularity"] = v.regularity ? regularity_json(*v.regularity) : json(nullptr);
  json cumulative = json::object();
  for (const auto& [n, d] : v.cumulative) cumulative[std::to_string(n)] = d;
  doc["cumulative"] = cumulative;

  const std::size_t b3 = h.dim(3);
  const std::size_t ker = cup_square_kernel_dim(h);
  doc["pi3_check"] = {{"b3", b3},
                      {"cup_square_kernel", ker},
                      {"expected", b3 + ker},
                      {"computed", v.table.computed_through >= 3 ? json(v.table.dim(3)) : json(nullptr)}};
  if (v.kind == DichotomyVerdict::Kind::Elliptic) {
    const auto e = euler_characteristics(v.table, h);
    doc["euler"] = {{"e", e.topological}, {"chi_pi", e.homotopy}, {"flags", e.flags}};
  }
  if (spec.kahler_class && h.formal_dimension() && *h.formal_dimension() % 2 == 0) {
    const int n = *h.formal_dimension() / 2;
    const auto omega = Polynomial::generator(h.ambient(), *spec.kahler_class);
    const auto lef = check_hard_lefschetz(h, omega, n);
    json degrees = json::array();
    for (const auto& d : lef.degrees)
      degrees.push_back({{"degree", d.degree}, {"rank", d.rank}, {"isomorphism", d.isomorphism}});
    doc["hard_lefschetz"] = {{"kahler_class", *spec.kahler_class},
                             {"holds", lef.holds},
                             {"degrees", degrees}};
  }
  return doc;
}

void render_classify(const json& doc, std::ostream& out) {
  out << doc["summary"].get<std::string>() << "\n";
  render_homotopy(doc["homotopy"], out);
  out << "(model through degree " << doc["computed_through"].get<int>() << ")\n";
  auto print_check = [&](const json& b) {
    out << "FH " << b["name"].get<std::string>() << "  " << b["formula"].get<std::string>()
        << ": " << b["lhs"].get<long>() << " vs " << b["rhs"].get<long>() << "  "
        << (b["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  };
  if (!doc["fh_audit"].is_null())
    for (const auto& b : doc["fh_audit"]) print_check(b);
  if (!doc["violated_bound"].is_null()) print_check(doc["violated_bound"]);
  if (!doc["regularity"].is_null()) {
    const auto& r = doc["regularity"];
    out << "regular sequence: " << (r["regular"].get<bool>() ? "yes" : "no") << " ("
        << r["reason"].get<std::string>() << ")";
    if (!r["radical_power"].is_null())
      out << "; (y)^" << r["radical_power"].get<int>() << " lies in the ideal";
    out << "\n";
  }
  const auto& p3 = doc["pi3_check"];
  out << "pi_3 check: b_3 + dim ker(S^2 A^2 -> A^4) = " << p3["b3"].get<std::size_t>() << " + "
      << p3["cup_square_kernel"].get<std::size_t>() << " = " << p3["expected"].get<std::size_t>();
  if (!p3["computed"].is_null()) out << ", model gives " << p3["computed"].get<std::size_t>();
  out << "\n";
  if (doc.contains("euler"))
    out << "e = " << doc["euler"]["e"].get<long>() << ", chi_pi = "
        << doc["euler"]["chi_pi"].get<long>() << "\n";
  if (doc.contains("hard_lefschetz"))
    out << "hard Lefschetz for " << doc["hard_lefschetz"]["kahler_class"].get<std::string>()
        << ": " << (doc["hard_lefschetz"]["holds"].get<bool>() ? "holds" : "fails") << "\n";
}

json koszul_command(const AlgebraSpec& spec, const Common& c, std::optional<int> j_only,
                    std::optional<int> internal) {
  const int N = default_max_degree(spec.presentation, c);
  auto [model, table] = build_bigraded_model(spec.presentation, N);
  const auto pure = is_pure(model);
  if (!pure) throw InputError("the model through degree " + std::to_string(N) + " is not pure");
  const int bound = internal.value_or(default_koszul_bound(*pure));
  json even = json::array(), odd = json::array();
  for (const auto& g : pure->even_algebra->generators())
    even.push_back({{"name", g.name}, {"degree", g.degree}});
  for (std::size_t i = 0; i < pure->odd_count(); ++i)
    odd.push_back({{"name", pure->odd_gens[i].name},
                   {"degree", pure->odd_gens[i].degree},
                   {"d", pure->boundaries[i].to_string()}});
  json homology = json::array();
  const int lo = j_only.value_or(0);
  const int hi = j_only.value_or(static_cast<int>(pure->odd_count()));
  for (int j = lo; j <= hi; ++j)
    homology.push_back({{"j", j}, {"dims", koszul_homology(*pure, j, bound)}});
  return {{"command", "koszul"},
          {"model_degree", N},
          {"even", even},
          {"odd", odd},
          {"internal_bound", bound},
          {"homology", homology},
          {"regularity", regularity_json(is_regular_sequence(*pure, internal))}};
}

void render_koszul(const json& doc, std::ostream& out) {
  out << "pure model: Q = {";
  bool first = true;
  for (const auto& g : doc["even"]) {
    out << (first ? "" : ", ") << g["name"].get<std::string>() << ":" << g["degree"].get<int>();
    first = false;
  }
  out << "}, P = {";
  first = true;
  for (const auto& g : doc["odd"]) {
    out << (first ? "" : ", ") << g["name"].get<std::string>() << ":" << g["degree"].get<int>();
    first = false;
  }
  out << "}\n";
  for (const auto& g : doc["odd"])
    out << "  d(" << g["name"].get<std::string>() << ") = " << g["d"].get<std::string>() << "\n";
  out << "Koszul homology by internal degree 0.." << doc["internal_bound"].get<int>() << ":\n";
  for (const auto& h : doc["homology"]) {
    out << "  H_" << h["j"].get<int>() << ":";
    for (const auto& d : h["dims"]) out << " " << d.get<std::size_t>();
    out << "\n";
  }
  const auto& r = doc["regularity"];
  out << "regular sequence: " << (r["regular"].get<bool>() ? "yes" : "no") << " ("
      << r["reason"].get<std::string>() << ")\n";
}

json diamond_command(const HodgeDiamond& d, int& status) {
  const auto report = validate_diamond(d);
  json doc = {{"command", "diamond"},
              {"n", d.n},
              {"hodge", d.row_major()},
              {"valid", report.valid},
              {"simply_connected", report.simply_connected},
              {"violations", report.violations}};
  json betti = json::array();
  for (int k = 0; k <= 2 * d.n; ++k) betti.push_back(d.betti(k));
  doc["betti"] = betti;
  if (!report.valid) {
    status = kInvalidInput;
    return doc;
  }
  const auto v = d.n == 2 ? classify_surface(d) : classify_threefold(d);
  doc["elliptic"] = to_string(v.elliptic);
  doc["diamond_label"] = v.diamond ? json(std::string(1, *v.diamond)) : json(nullptr);
  json cases = json::array();
  for (const auto& c : v.cases) cases.push_back({{"space", c.space}, {"conditions", c.conditions}});
  doc["cases"] = cases;
  doc["trace"] = v.trace;
  if (v.invariants)
    doc["surface_invariants"] = {{"q", v.invariants->q},     {"p_g", v.invariants->p_g},
                                 {"chi_O", v.invariants->chi_O}, {"c2", v.invariants->c2},
                                 {"c1sq", v.invariants->c1sq}, {"K2", v.invariants->K2}};
  if (v.diamond && *v.diamond == 'd' && d.n == 3) {
    const auto ex = exclude_diamond_d(d);
    doc["exclusion"] = {{"chi_O", ex.chi_O}, {"c1c2", ex.c1c2}, {"three_c1c2", ex.three_c1c2}};
  }
  if (report.simply_connected) {
    const auto ls = ls_bounds(d);
    doc["ls_category"] = {{"cat0_lower", ls.cat0_lower}, {"cat_upper", ls.cat_upper},
                          {"squeeze", ls.squeeze}};
  }
  return doc;
}

void render_diamond(const json& doc, std::ostream& out) {
  const int n = doc["n"];
  const auto hodge = doc["hodge"].get<std::vector<long>>();
  // Draw the diamond with h(n,n) on top, h(0,0) at the bottom.
  for (int k = 2 * n; k >= 0; --k) {
    out << std::string(static_cast<std::size_t>(std::abs(n - k)) * 2, ' ');
    bool first = true;
    for (int p = n; p >= 0; --p) {
      const int q = k - p;
      if (q < 0 || q > n) continue;
      out << (first ? "" : "   ") << hodge[static_cast<std::size_t>(p * (n + 1) + q)];
      first = false;
    }
    out << "\n";
  }
  out << "betti:";
  int k = 0;
  for (const auto& b : doc["betti"]) out << " b_" << k++ << "=" << b.get<long>();
  out << "\n";
  for (const auto& v : doc["violations"]) out << "violation: " << v.get<std::string>() << "\n";
  if (!doc["valid"].get<bool>()) return;
  out << "verdict: " << doc["elliptic"].get<std::string>();
  if (!doc["diamond_label"].is_null())
    out << " (diamond (" << doc["diamond_label"].get<std::string>() << "))";
  out << "\n";
  for (const auto& c : doc["cases"])
    out << "  case: " << c["space"].get<std::string>() << " [" << c["conditions"].get<std::string>()
        << "]\n";
  if (doc.contains("surface_invariants")) {
    const auto& s = doc["surface_invariants"];
    out << "chi(O) = " << s["chi_O"].get<long>() << ", c2 = " << s["c2"].get<long>()
        << ", c1^2 = " << s["c1sq"].get<long>() << "\n";
  }
  for (const auto& t : doc["trace"]) out << "  " << t.get<std::string>() << "\n";
  if (doc.contains("ls_category"))
    out << "LS category: " << doc["ls_category"]["squeeze"].get<std::string>() << "\n";
}

json fano_json(const FanoFamily& f) {
  json j = {{"id", f.id},
            {"b2", f.b2},
            {"b3", f.b3.to_string()},
            {"elliptic", f.elliptic},
            {"homogeneous", f.homogeneous},
            {"families", f.family_count},
            {"description", f.description}};
  j["index"] = f.index_r ? json(*f.index_r) : json(nullptr);
  j["genus_or_degree"] = f.genus_or_degree ? json(*f.genus_or_degree) : json(nullptr);
  j["diamond"] = f.diamond ? json(std::string(1, *f.diamond)) : json(nullptr);
  return j;
}

void render_fano_row(const json& f, std::ostream& out) {
  std::ostringstream b3;
  b3 << "b3=" << f["b3"].get<std::string>();
  out << std::left << std::setw(14) << f["id"].get<std::string>() << " b2=" << f["b2"].get<int>()
      << "  " << std::setw(7) << b3.str() << " " << (f["elliptic"].get<bool>() ? "elliptic" : "-       ")
      << "  " << f["description"].get<std::string>() << "\n";
}

void render_fano_show(const json& f, std::ostream& out) {
  out << "id: " << f["id"].get<std::string>() << "\n"
      << "b2: " << f["b2"].get<int>() << "\n"
      << "b3: " << f["b3"].get<std::string>() << "\n";
  if (!f["index"].is_null()) out << "index: " << f["index"].get<int>() << "\n";
  if (!f["genus_or_degree"].is_null())
    out << "genus/degree: " << f["genus_or_degree"].get<int>() << "\n";
  out << "elliptic: " << (f["elliptic"].get<bool>() ? "yes" : "no") << "\n";
  if (!f["diamond"].is_null()) out << "diamond: (" << f["diamond"].get<std::string>() << ")\n";
  if (f["homogeneous"].get<bool>()) out << "homogeneous: yes\n";
  if (f["families"].get<std::size_t>() > 1)
    out << "families: " << f["families"].get<std::size_t>() << "\n";
  out << "description: " << f["description"].get<std::string>() << "\n";
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json_out, "Machine-readable output");
  cmd->add_option("--max-degree", c.max_degree, "Build the model through this degree")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational homotopy of formal spaces from cohomology presentations", "rht"};
  app.require_subcommand(1);
  Common common;
  std::string path;
  std::optional<int> koszul_j, koszul_internal, fano_b2;
  bool fano_elliptic = false;
  std::string fano_id;

  auto* model = app.add_subcommand("model", "Minimal model and rational homotopy table");
  model->add_option("file", path, "Algebra JSON file")->required();
  add_common(model, common);

  auto* classify = app.add_subcommand("classify", "Elliptic / hyperbolic decision");
  classify->add_option("file", path, "Algebra JSON file")->required();
  add_common(classify, common);

  auto* koszul = app.add_subcommand("koszul", "Koszul homology of a pure model");
  koszul->add_option("file", path, "Algebra JSON file")->required();
  koszul->add_option("--j", koszul_j, "Only this homological degree")->check(CLI::NonNegativeNumber);
  koszul->add_option("--internal", koszul_internal, "Largest internal degree")
      ->check(CLI::NonNegativeNumber);
  add_common(koszul, common);

  auto* diamond = app.add_subcommand("diamond", "Validate and classify a Hodge diamond");
  diamond->add_option("file", path, "Diamond JSON file")->required();
  add_common(diamond, common);

  auto* fano = app.add_subcommand("fano", "Fano threefold table");
  fano->require_subcommand(1);
  auto* fano_list = fano->add_subcommand("list", "List families");
  fano_list->add_option("--b2", fano_b2, "Second Betti number");
  fano_list->add_flag("--elliptic", fano_elliptic, "Only elliptic families");
  add_common(fano_list, common);
  auto* fano_show = fano->add_subcommand("show", "Show one family");
  fano_show->add_option("id", fano_id, "Family id, e.g. b2=1/X22")->required();
  add_common(fano_show, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    // help() follows the deepest subcommand that was named.
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rht: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  int status = kOk;
  try {
    json doc;
    void (*render)(const json&, std::ostream&) = nullptr;
    if (*model) {
      doc = model_command(parse_algebra_file(path), common);
      render = render_model;
    } else if (*classify) {
      doc = classify_command(parse_algebra_file(path), common);
      render = render_classify;
    } else if (*koszul) {
      doc = koszul_command(parse_algebra_file(path), common, koszul_j, koszul_internal);
      render = render_koszul;
    } else if (*diamond) {
      doc = diamond_command(parse_diamond_file(path), status);
      render = render_diamond;
    } else if (*fano_list) {
      doc = json::array();
      for (const auto& f : list_families(fano_b2, fano_elliptic ? std::optional<bool>(true)
                                                               : std::nullopt))
        doc.push_back(fano_json(f));
      render = [](const json& rows, std::ostream& o) {
        for (const auto& r : rows) render_fano_row(r, o);
      };
    } else if (*fano_show) {
      doc = fano_json(lookup(fano_id));
      render = render_fano_show;
    }
    if (common.json_out)
      out << doc.dump(2) << "\n";
    else
      render(doc, out);
    if (status != kOk) err << "rht: invalid input\n";
    return status;
  } catch (const InputError& e) {
    err << "rht: " << e.what() << "\n";
  } catch (const NotPoincareAlgebraError& e) {
    err << "rht: " << e.what() << "\n";
  } catch (const InconclusiveError& e) {
    err << "rht: " << e.what() << "\n";
  }
  return kInvalidInput;
}

}  // namespace rht::cli
