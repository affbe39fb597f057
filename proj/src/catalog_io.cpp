#include "fsys/catalog_io.hpp"

#include <fstream>
#include <sstream>

#include "fsys/errors.hpp"
#include "json.hpp"

namespace fsys {

using json = nlohmann::ordered_json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError("missing field '" + std::string(key) + "' in " + where);
  return j.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + " must be a string");
  return j.get<std::string>();
}

long long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + " must be an integer");
  return j.get<long long>();
}

Label label_of(const std::vector<std::string>& labels, const json& j, const std::string& where) {
  const std::string name = as_string(j, where);
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<Label>(i);
  throw SchemaError("unknown label '" + name + "' in " + where);
}

json wire(const CycNumber& x) {
  json out = json::array();
  for (const auto& s : x.to_wire()) out.push_back(s);
  return out;
}

CycNumber number(const FieldPtr& field, const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be an array of coefficient strings");
  std::vector<std::string> coeffs;
  for (const auto& c : j) coeffs.push_back(as_string(c, where));
  if (coeffs.size() != static_cast<size_t>(field->degree()))
    throw SchemaError(where + " has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                      std::to_string(field->degree()));
  try {
    return CycNumber::from_wire(field, coeffs);
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

json matrix_json(const FieldMatrix& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(wire(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldMatrix matrix_from(const FieldPtr& field, const json& j, size_t n, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " entries must be an array of rows");
  const size_t rows = j.size();
  const size_t cols = rows == 0 ? 0 : (j.front().is_array() ? j.front().size() : 0);
  for (const auto& row : j)
    if (!row.is_array() || row.size() != cols)
      throw SchemaError("size mismatch in " + where + ": rows have unequal lengths");
  if (rows != n || cols != n)
    throw SchemaError("size mismatch in " + where + ": got " + std::to_string(rows) + "x" + std::to_string(cols) +
                      ", expected " + std::to_string(n) + "x" + std::to_string(n));
  FieldMatrix m(field, n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      m(r, c) = number(field, j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  return m;
}

json basis_json(const FusionRing& ring, const std::vector<BasisTriple>& basis) {
  json out = json::array();
  for (const auto& t : basis) out.push_back(json::array({t.i, ring.name(t.e), t.j}));
  return out;
}

void check_basis(const FusionRing& ring, const std::vector<BasisTriple>& expected, const json& j,
                 const std::string& where) {
  if (!j.is_array() || j.size() != expected.size())
    throw SchemaError("size mismatch in " + where + ": expected " + std::to_string(expected.size()) + " entries");
  for (size_t k = 0; k < expected.size(); ++k) {
    const auto& t = j[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!t.is_array() || t.size() != 3) throw SchemaError(at + " must be [i, label, j]");
    const BasisTriple got{static_cast<int>(as_int(t[0], at)), label_of(ring.labels(), t[1], at),
                          static_cast<int>(as_int(t[2], at))};
    if (!(got == expected[k])) throw SchemaError(at + " does not follow the (e, i, j) lexicographic order");
  }
}

std::string quad_where(const FusionRing& r, const Quad& q) {
  return "F(" + r.name(q[0]) + "," + r.name(q[1]) + "," + r.name(q[2]) + "," + r.name(q[3]) + ")";
}

}  // namespace

std::string serialize_system(const SystemFile& f) {
  const FusionSystem& s = f.fusion();
  const FusionRing& r = s.ring;
  json j;
  j["format"] = "fsys";
  j["format_version"] = kFormatVersion;
  j["name"] = f.name;
  j["cyclotomic_order"] = s.field->order();
  j["labels"] = r.labels();
  j["unit"] = r.name(r.unit());
  json dual = json::object();
  for (Label a = 0; a < static_cast<Label>(r.rank()); ++a) dual[r.name(a)] = r.name(r.dual(a));
  j["dual"] = dual;
  json fusion = json::array();
  const auto L = static_cast<Label>(r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c)
        if (r.N(a, b, c) > 0) fusion.push_back(json::array({r.name(a), r.name(b), r.name(c), r.N(a, b, c)}));
  j["fusion"] = fusion;
  json F = json::array();
  for (const auto& [q, m] : s.F) {
    json block;
    block["quad"] = json::array({r.name(q[0]), r.name(q[1]), r.name(q[2]), r.name(q[3])});
    block["rows"] = basis_json(r, row_basis(r, q));
    block["cols"] = basis_json(r, col_basis(r, q));
    block["entries"] = matrix_json(m);
    F.push_back(std::move(block));
  }
  j["F"] = F;
  if (f.modular) {
    json R = json::array();
    for (const auto& [t, m] : f.system.R) {
      json block;
      block["triple"] = json::array({r.name(t[0]), r.name(t[1]), r.name(t[2])});
      block["entries"] = matrix_json(m);
      R.push_back(std::move(block));
    }
    j["R"] = R;
    json eps = json::object();
    for (Label a = 0; a < L; ++a) eps[r.name(a)] = f.system.epsilon.at(static_cast<size_t>(a));
    j["epsilon"] = eps;
    if (f.system.sqrt_u) {
      json lam = json::object();
      for (Label a = 0; a < L; ++a) lam[r.name(a)] = wire(f.system.sqrt_u->at(static_cast<size_t>(a)));
      j["sqrt_u"] = lam;
    }
  }
  if (f.grading) {
    json g;
    g["modulus"] = f.grading->modulus;
    json deg = json::object();
    for (Label a = 0; a < L; ++a) deg[r.name(a)] = f.grading->degree.at(static_cast<size_t>(a));
    g["degrees"] = deg;
    j["grading"] = g;
  }
  j["metadata"] = json{{"provenance", f.metadata.provenance}, {"paper_section", f.metadata.paper_section}};
  return j.dump(2) + "\n";
}

SystemFile parse_system(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("top level must be an object");
  if (as_string(require(j, "format", "document"), "format") != "fsys") throw SchemaError("format must be \"fsys\"");
  if (as_int(require(j, "format_version", "document"), "format_version") != kFormatVersion)
    throw SchemaError("unsupported format_version");

  SystemFile f;
  f.name = as_string(require(j, "name", "document"), "name");
  const long long order = as_int(require(j, "cyclotomic_order", "document"), "cyclotomic_order");
  if (order < 1 || order > 100000) throw SchemaError("cyclotomic_order out of range");
  const FieldPtr field = CycField::get(static_cast<int>(order));

  const json& jl = require(j, "labels", "document");
  if (!jl.is_array()) throw SchemaError("labels must be an array");
  std::vector<std::string> labels;
  for (const auto& l : jl) {
    labels.push_back(as_string(l, "labels"));
    for (size_t k = 0; k + 1 < labels.size(); ++k)
      if (labels[k] == labels.back()) throw SchemaError("duplicate label '" + labels.back() + "'");
  }
  const size_t n = labels.size();
  const Label unit = n == 0 ? 0 : label_of(labels, require(j, "unit", "document"), "unit");
  std::vector<Label> dual(n);
  const json& jd = require(j, "dual", "document");
  for (size_t a = 0; a < n; ++a)
    dual[a] = label_of(labels, require(jd, labels[a].c_str(), "dual"), "dual." + labels[a]);
  std::vector<int> mult(n * n * n, 0);
  const json& jf = require(j, "fusion", "document");
  if (!jf.is_array()) throw SchemaError("fusion must be an array");
  for (size_t k = 0; k < jf.size(); ++k) {
    const std::string at = "fusion[" + std::to_string(k) + "]";
    const auto& e = jf[k];
    if (!e.is_array() || e.size() != 4) throw SchemaError(at + " must be [a, b, c, N]");
    const auto a = static_cast<size_t>(label_of(labels, e[0], at));
    const auto b = static_cast<size_t>(label_of(labels, e[1], at));
    const auto c = static_cast<size_t>(label_of(labels, e[2], at));
    const long long m = as_int(e[3], at);
    if (m < 0 || m > 1000) throw SchemaError(at + " multiplicity out of range");
    mult[(a * n + b) * n + c] = static_cast<int>(m);
  }
  FusionRing ring(labels, unit, dual, mult);

  FusionSystem s{ring, field, {}};
  const json& jF = require(j, "F", "document");
  if (!jF.is_array()) throw SchemaError("F must be an array");
  for (size_t k = 0; k < jF.size(); ++k) {
    const std::string at = "F[" + std::to_string(k) + "]";
    const json& quad = require(jF[k], "quad", at);
    if (!quad.is_array() || quad.size() != 4) throw SchemaError(at + ".quad must list four labels");
    const Quad q{label_of(labels, quad[0], at + ".quad"), label_of(labels, quad[1], at + ".quad"),
                 label_of(labels, quad[2], at + ".quad"), label_of(labels, quad[3], at + ".quad")};
    const std::string where = quad_where(ring, q);
    const int dim = ring.N4(q[0], q[1], q[2], q[3]);
    if (dim == 0) throw SchemaError(where + " is not admissible");
    if (s.F.count(q)) throw SchemaError(where + " given twice");
    check_basis(ring, row_basis(ring, q), require(jF[k], "rows", where), where + ".rows");
    check_basis(ring, col_basis(ring, q), require(jF[k], "cols", where), where + ".cols");
    s.F.emplace(q, matrix_from(field, require(jF[k], "entries", where), static_cast<size_t>(dim), where));
  }
  for (const auto& q : s.admissible_quads())
    if (!s.F.count(q)) throw SchemaError("missing F block " + quad_where(ring, q));
  f.system.base = std::move(s);

  if (j.contains("R")) {
    f.modular = true;
    const json& jR = j.at("R");
    if (!jR.is_array()) throw SchemaError("R must be an array");
    for (size_t k = 0; k < jR.size(); ++k) {
      const std::string at = "R[" + std::to_string(k) + "]";
      const json& tri = require(jR[k], "triple", at);
      if (!tri.is_array() || tri.size() != 3) throw SchemaError(at + ".triple must list three labels");
      const Triple t{label_of(labels, tri[0], at), label_of(labels, tri[1], at), label_of(labels, tri[2], at)};
      const std::string where = "R(" + labels[static_cast<size_t>(t[0])] + "," + labels[static_cast<size_t>(t[1])] +
                                "," + labels[static_cast<size_t>(t[2])] + ")";
      const int dim = ring.N(t[0], t[1], t[2]);
      if (dim == 0) throw SchemaError(where + " is not admissible");
      if (f.system.R.count(t)) throw SchemaError(where + " given twice");
      f.system.R.emplace(t, matrix_from(field, require(jR[k], "entries", where), static_cast<size_t>(dim), where));
    }
    const json& je = require(j, "epsilon", "document");
    for (size_t a = 0; a < n; ++a) {
      const long long e = as_int(require(je, labels[a].c_str(), "epsilon"), "epsilon." + labels[a]);
      if (e != 1 && e != -1) throw SchemaError("epsilon." + labels[a] + " must be 1 or -1");
      f.system.epsilon.push_back(static_cast<int>(e));
    }
    if (j.contains("sqrt_u")) {
      std::vector<CycNumber> lam;
      for (size_t a = 0; a < n; ++a)
        lam.push_back(number(field, require(j.at("sqrt_u"), labels[a].c_str(), "sqrt_u"), "sqrt_u." + labels[a]));
      f.system.sqrt_u = std::move(lam);
    }
  } else if (j.contains("epsilon") || j.contains("sqrt_u")) {
    throw SchemaError("epsilon/sqrt_u given without R");
  }

  if (j.contains("grading")) {
    const json& jg = j.at("grading");
    Grading g;
    g.modulus = static_cast<int>(as_int(require(jg, "modulus", "grading"), "grading.modulus"));
    const json& deg = require(jg, "degrees", "grading");
    for (size_t a = 0; a < n; ++a)
      g.degree.push_back(static_cast<int>(as_int(require(deg, labels[a].c_str(), "grading.degrees"),
                                                 "grading.degrees." + labels[a])));
    f.grading = std::move(g);
  }
  if (j.contains("metadata")) {
    const json& jm = j.at("metadata");
    if (jm.contains("provenance")) f.metadata.provenance = as_string(jm.at("provenance"), "metadata.provenance");
    if (jm.contains("paper_section"))
      f.metadata.paper_section = as_string(jm.at("paper_section"), "metadata.paper_section");
  }
  return f;
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

void save_system(const SystemFile& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_system(f);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace fsys
