#include "fsys/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "fsys/catalog.hpp"
#include "fsys/errors.hpp"
#include "json.hpp"

namespace fsys {

namespace {

using json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kNotApplicable = 3;

struct Options {
  bool json = false;
  bool approx = false;
};

json check_json(const CheckResult& c, bool approx) {
  json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["instances"] = c.instances;
  j["violations"] = c.violations;
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (!c.values.empty()) {
    json vals = json::array();
    for (const auto& v : c.values) {
      json x{{"key", v.key}, {"exact", v.exact}};
      if (approx) x["approx"] = v.approx;
      vals.push_back(std::move(x));
    }
    j["values"] = vals;
  }
  return j;
}

json report_json(const Report& rep, bool approx) {
  json j;
  j["subject"] = rep.subject;
  j["outcome"] = to_string(rep.outcome);
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back(check_json(c, approx));
  j["checks"] = checks;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

void print_report(std::ostream& out, const Report& rep, bool approx) {
  out << rep.subject << ": " << to_string(rep.outcome) << "\n";
  for (const auto& c : rep.checks) {
    out << "  " << c.name << ": " << to_string(c.status);
    if (c.status != Status::skipped) out << " (" << c.instances << " instances)";
    out << "\n";
    if (c.violations > 0) out << "    " << c.violations << " violation(s); first: " << c.witness << "\n";
    else if (!c.witness.empty()) out << "    " << c.witness << "\n";
    for (const auto& n : c.notes) out << "    note: " << n << "\n";
    for (const auto& v : c.values) {
      out << "    " << v.key << " = " << v.exact;
      if (approx) out << "  (approx " << v.approx << ")";
      out << "\n";
    }
  }
  for (const auto& n : rep.notes) out << "  note: " << n << "\n";
}

json document(const std::string& command) {
  json j;
  j["format_version"] = kFormatVersion;
  j["command"] = command;
  return j;
}

int outcome_code(Outcome o) { return o == Outcome::fail ? kFail : kPass; }

Report verify_file(const SystemFile& f) {
  if (f.modular) return verify_modular(f.system);
  Report rep = verify_fusion(f.fusion());
  rep.subject = "fusion-only";
  rep.notes.push_back("no braiding data: modular checks skipped");
  return rep;
}

std::string matrix_string(const FieldMatrix& m) {
  std::ostringstream os;
  for (size_t r = 0; r < m.rows(); ++r) {
    os << "    [";
    for (size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

json matrix_json(const FieldMatrix& m, bool approx) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c) {
      if (approx)
        row.push_back(json{{"exact", m(r, c).to_string()}, {"approx", approx_string(m(r, c))}});
      else
        row.push_back(m(r, c).to_string());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CycNumber parse_tau(const std::string& text, const FieldPtr& field) {
  if (!text.empty() && text.front() == '[') {
    const json j = json::parse(text);
    std::vector<std::string> coeffs;
    for (const auto& c : j) coeffs.push_back(c.get<std::string>());
    return CycNumber::from_wire(field, coeffs);
  }
  if (text.rfind("zeta", 0) == 0) {
    const auto caret = text.find('^');
    const int order = std::stoi(text.substr(4, caret == std::string::npos ? std::string::npos : caret - 4));
    const long long k = caret == std::string::npos ? 1 : std::stoll(text.substr(caret + 1));
    if (order < 1) throw ParseError("bad root of unity '" + text + "'");
    return CycNumber::root_of_unity(CycField::get(order), k);
  }
  if (text.rfind("z", 0) == 0) {
    const auto caret = text.find('^');
    const long long k = caret == std::string::npos ? 1 : std::stoll(text.substr(caret + 1));
    return CycNumber::root_of_unity(field, k);
  }
  return CycNumber(CycField::get(1), parse_rational(text));
}

Grading parse_grading(const std::string& text, const FusionRing& ring) {
  Grading g;
  const auto colon = text.find(':');
  if (colon != std::string::npos && text.find('{') == std::string::npos) {
    g.modulus = std::stoi(text.substr(0, colon));
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) g.degree.push_back(std::stoi(item));
    return g;
  }
  std::ifstream in(text);
  if (!in) throw std::runtime_error("cannot open grading file '" + text + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed grading file: ") + e.what());
  }
  g.modulus = j.at("modulus").get<int>();
  for (const auto& l : ring.labels()) g.degree.push_back(j.at("degrees").at(l).get<int>());
  return g;
}

int cmd_verify(const std::string& path, const Options& o, std::ostream& out) {
  const SystemFile f = resolve_system(path);
  const Report rep = verify_file(f);
  if (o.json) {
    json j = document("verify");
    j["name"] = f.name;
    j["report"] = report_json(rep, o.approx);
    out << j.dump(2) << "\n";
  } else {
    out << "verify " << f.name << "\n";
    print_report(out, rep, o.approx);
  }
  return outcome_code(rep.outcome);
}

int cmd_equiv(const std::string& a, const std::string& b, const Options& o, std::ostream& out) {
  const SystemFile fa = resolve_system(a);
  const SystemFile fb = resolve_system(b);
  const bool modular = fa.modular && fb.modular;
  const EquivalenceResult res =
      modular ? decide_gauge_equiv(fa.system, fb.system) : decide_gauge_equiv(fa.fusion(), fb.fusion());
  if (o.json) {
    json j = document("equiv");
    j["systems"] = json::array({fa.name, fb.name});
    j["level"] = modular ? "modular" : "fusion";
    j["verdict"] = to_string(res.verdict);
    if (res.braiding_partial) j["braiding"] = "indistinguishable by implemented invariants";
    if (!res.witness.empty()) j["witness"] = res.witness;
    j["invariants_compared"] = res.invariants;
    if (!res.notes.empty()) j["notes"] = res.notes;
    out << j.dump(2) << "\n";
  } else {
    out << "equiv " << fa.name << " " << fb.name << " (" << (modular ? "modular" : "fusion")
        << "): " << to_string(res.verdict) << "\n";
    if (!res.witness.empty()) out << "  witness: " << res.witness << "\n";
    out << "  invariants compared: " << res.invariants << "\n";
    for (const auto& n : res.notes) out << "  note: " << n << "\n";
  }
  switch (res.verdict) {
    case Verdict::equivalent:
      return kPass;
    case Verdict::inequivalent:
      return kFail;
    case Verdict::not_applicable:
      return kNotApplicable;
  }
  return kUsage;
}

int cmd_twist(const std::string& path, const std::optional<long long>& sigma, const std::optional<std::string>& tau,
              const std::optional<std::string>& grading, const std::string& out_path, const Options& o,
              std::ostream& out, std::ostream& err) {
  if (sigma.has_value() == tau.has_value()) {
    err << "twist: give exactly one of --sigma or --tau\n";
    return kUsage;
  }
  SystemFile f = resolve_system(path);
  std::string how;
  if (sigma) {
    if (f.modular)
      f.system = twist_system(f.system, *sigma);
    else
      f.system.base = twist_system(f.system.base, *sigma);
    how = "sigma_" + std::to_string(*sigma);
  } else {
    if (f.modular) {
      err << "twist: --tau applies to fusion data only\n";
      return kUsage;
    }
    Grading g;
    if (grading)
      g = parse_grading(*grading, f.fusion().ring);
    else if (f.grading)
      g = *f.grading;
    else {
      err << "twist: --tau needs a grading (none shipped with this system)\n";
      return kUsage;
    }
    const CycNumber t = parse_tau(*tau, f.fusion().field);
    f.system.base = tau_twist(f.fusion(), g, t);
    how = "tau = " + t.to_string();
  }
  const Report rep = verify_file(f);
  std::ostream& summary = out_path.empty() ? err : out;
  if (out_path.empty())
    out << serialize_system(f);
  else
    save_system(f, out_path);
  if (o.json) {
    json j = document("twist");
    j["name"] = f.name;
    j["twist"] = how;
    if (!out_path.empty()) j["output"] = out_path;
    j["report"] = report_json(rep, o.approx);
    summary << j.dump(2) << "\n";
  } else {
    summary << "twist " << f.name << " by " << how << "\n";
    print_report(summary, rep, o.approx);
  }
  return outcome_code(rep.outcome);
}

int cmd_orbit(const std::string& path, const Options& o, std::ostream& out) {
  const SystemFile f = resolve_system(path);
  const OrbitReport rep = f.modular ? galois_orbit(f.system) : galois_orbit(f.fusion());
  if (o.json) {
    json j = document("orbit");
    j["name"] = f.name;
    j["cyclotomic_order"] = rep.order;
    j["twists"] = rep.automorphisms.size();
    j["classes"] = rep.class_count();
    j["method"] = rep.method;
    json members = json::array();
    for (size_t i = 0; i < rep.automorphisms.size(); ++i)
      members.push_back(json{{"k", rep.automorphisms[i]}, {"class", rep.class_of[i]}});
    j["members"] = members;
    j["representatives"] = rep.representatives;
    if (rep.partial) j["note"] = "braidings within a class are indistinguishable by implemented invariants";
    out << j.dump(2) << "\n";
  } else {
    out << "orbit " << f.name << " over Q(zeta_" << rep.order << "): " << rep.automorphisms.size() << " twists, "
        << rep.class_count() << " classes (method: " << rep.method << ")\n";
    for (size_t i = 0; i < rep.automorphisms.size(); ++i)
      out << "  k=" << rep.automorphisms[i] << "  class " << rep.class_of[i] << "\n";
    out << "  representatives:";
    for (int k : rep.representatives) out << " " << k;
    out << "\n";
    if (rep.partial) out << "  note: braidings within a class are indistinguishable by implemented invariants\n";
  }
  return kPass;
}

int cmd_intrinsic(const std::string& path, const Options& o, std::ostream& out) {
  const SystemFile f = resolve_system(path);
  const IntrinsicData d = f.modular ? intrinsic_data(f.system) : intrinsic_data(f.fusion());
  const FusionRing& r = d.ring;
  const auto L = static_cast<Label>(r.rank());
  if (o.json) {
    json j = document("intrinsic");
    j["name"] = f.name;
    json rules = json::array();
    for (Label a = 0; a < L; ++a)
      for (Label b = 0; b < L; ++b)
        for (Label c = 0; c < L; ++c)
          if (r.N(a, b, c) > 0) rules.push_back(json::array({r.name(a), r.name(b), r.name(c), r.N(a, b, c)}));
    j["fusion"] = rules;
    json u = json::object();
    for (Label a = 0; a < L; ++a) u[r.name(a)] = d.u[static_cast<size_t>(a)].to_string();
    j["u"] = u;
    if (d.S_hat) j["S_hat"] = matrix_json(*d.S_hat, o.approx);
    if (d.S) j["S"] = matrix_json(*d.S, o.approx);
    json cps = json::array();
    for (const auto& [t, cp] : d.r_charpolys) {
      json coeffs = json::array();
      for (const auto& c : cp) coeffs.push_back(c.to_string());
      cps.push_back(json{{"triple", json::array({r.name(t[0]), r.name(t[1]), r.name(t[2])})}, {"charpoly", coeffs}});
    }
    j["R_charpolys"] = cps;
    json rat = json::array();
    for (const auto& x : d.rational) rat.push_back(json{{"key", x.key}, {"value", format_rational(x.value)}});
    j["rational"] = rat;
    j["omitted"] = json::array({"T-matrix", "Frobenius-Schur indicators"});
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << "intrinsic data of " << f.name << "\n  fusion rules:\n";
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b) {
      std::string terms;
      for (Label c = 0; c < L; ++c) {
        if (r.N(a, b, c) == 0) continue;
        if (!terms.empty()) terms += " + ";
        terms += (r.N(a, b, c) > 1 ? std::to_string(r.N(a, b, c)) + "*" : "") + r.name(c);
      }
      out << "    " << r.name(a) << " * " << r.name(b) << " = " << terms << "\n";
    }
  for (Label a = 0; a < L; ++a) out << "  u_" << r.name(a) << " = " << d.u[static_cast<size_t>(a)].to_string() << "\n";
  if (d.S_hat) out << "  S-hat:\n" << matrix_string(*d.S_hat);
  if (d.S) out << "  S:\n" << matrix_string(*d.S);
  if (!d.S_hat) out << "  no braiding data: S-hat and R data unavailable\n";
  for (const auto& [t, cp] : d.r_charpolys) {
    out << "  charpoly R_{" << r.name(t[0]) << r.name(t[1]) << "}^" << r.name(t[2]) << ":";
    for (const auto& c : cp) out << " [" << c.to_string() << "]";
    out << "\n";
  }
  out << "  rational entries:\n";
  for (const auto& x : d.rational) out << "    " << x.key << " = " << format_rational(x.value) << "\n";
  out << "  not computed: T-matrix, Frobenius-Schur indicators\n";
  return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of fusion and modular systems over cyclotomic fields", "fsys"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Structured report");
  app.add_flag("--approx", o.approx, "Add floating-point renderings (display only)");
  app.fallthrough();

  std::string path, path_b, out_path, name;
  auto* verify = app.add_subcommand("verify", "Check every defining constraint");
  verify->add_option("system", path, "File or catalog:<name>")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide gauge equivalence");
  equiv->add_option("a", path)->required();
  equiv->add_option("b", path_b)->required();

  std::optional<long long> sigma;
  std::optional<std::string> tau, grading;
  auto* twist = app.add_subcommand("twist", "Galois twist or tau-twist");
  twist->add_option("system", path)->required();
  twist->add_option("--sigma", sigma, "Galois exponent k (zeta -> zeta^k)");
  twist->add_option("--tau", tau, "Root of unity: rational, z^k, zeta<m>^k or wire array");
  twist->add_option("--grading", grading, "Inline modulus:deg,deg,... or a JSON file");
  twist->add_option("--out", out_path, "Output .fsys path (default: stdout)");

  auto* orbit = app.add_subcommand("orbit", "Galois orbit and class grouping");
  orbit->add_option("system", path)->required();

  auto* intrinsic = app.add_subcommand("intrinsic", "Fusion rules, S-hat, S and R characteristic polynomials");
  intrinsic->add_option("system", path)->required();

  auto* cat = app.add_subcommand("catalog", "Built-in systems");
  cat->require_subcommand(1);
  bool all = false;
  auto* list = cat->add_subcommand("list", "List names");
  list->add_flag("--all", all, "Include braided variants");
  auto* show = cat->add_subcommand("show", "Print an entry");
  show->add_option("name", name)->required();
  auto* exp = cat->add_subcommand("export", "Write an entry to a file");
  exp->add_option("name", name)->required();
  exp->add_option("out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "fsys: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(path, o, out);
    if (*equiv) return cmd_equiv(path, path_b, o, out);
    if (*twist) return cmd_twist(path, sigma, tau, grading, out_path, o, out, err);
    if (*orbit) return cmd_orbit(path, o, out);
    if (*intrinsic) return cmd_intrinsic(path, o, out);
    if (*list) {
      const auto names = catalog_names(all);
      if (o.json) {
        json j = document("catalog list");
        j["names"] = names;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& n : names) out << n << "\n";
      }
      return kPass;
    }
    if (*show) {
      out << serialize_system(catalog(name));
      return kPass;
    }
    if (*exp) {
      save_system(catalog(name), out_path);
      return kPass;
    }
  } catch (const std::exception& e) {
    err << "fsys: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fsys
