#include "fsys/catalog.hpp"

#include <functional>
#include <map>

#include "fsys/errors.hpp"

namespace fsys {

namespace {

Label L(const FusionRing& r, const std::string& name) { return r.find(name).value(); }

void set_scalar(FusionSystem& s, const std::string& a, const std::string& b, const std::string& c,
                const std::string& u, const CycNumber& v) {
  const FusionRing& r = s.ring;
  s.F.at(Quad{L(r, a), L(r, b), L(r, c), L(r, u)}) = FieldMatrix::scalar(v, 1);
}

void set_R(ModularSystem& m, const std::string& a, const std::string& b, const std::string& c, const CycNumber& v) {
  const FusionRing& r = m.ring();
  m.R[Triple{L(r, a), L(r, b), L(r, c)}] = FieldMatrix::scalar(v, 1);
}

// Every admissible R block set to 1.
void trivial_braiding(ModularSystem& m) {
  const FusionRing& r = m.ring();
  const auto n = static_cast<Label>(r.rank());
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        if (r.N(a, b, c) > 0)
          m.R[Triple{a, b, c}] = FieldMatrix::identity(m.field(), static_cast<size_t>(r.N(a, b, c)));
  m.epsilon.assign(r.rank(), 1);
}

FusionRing fibonacci_ring() {
  return make_ring({"1", "x"}, "1", {{"1", "1", "1", 1}, {"1", "x", "x", 1}, {"x", "1", "x", 1}, {"x", "x", "1", 1},
                                     {"x", "x", "x", 1}});
}

FusionRing z2_ring() {
  return make_ring({"1", "x"}, "1", {{"1", "1", "1", 1}, {"1", "x", "x", 1}, {"x", "1", "x", 1}, {"x", "x", "1", 1}});
}

FusionRing su2_level2_ring() {
  std::vector<std::tuple<std::string, std::string, std::string, int>> rules;
  for (const char* a : {"1", "x1", "x2"}) {
    rules.emplace_back("1", a, a, 1);
    if (std::string(a) != "1") rules.emplace_back(a, "1", a, 1);
  }
  rules.emplace_back("x1", "x1", "1", 1);
  rules.emplace_back("x1", "x1", "x2", 1);
  rules.emplace_back("x1", "x2", "x1", 1);
  rules.emplace_back("x2", "x1", "x1", 1);
  rules.emplace_back("x2", "x2", "1", 1);
  return make_ring({"1", "x1", "x2"}, "1", rules);
}

FusionRing toric_ring() {
  const std::vector<std::string> names = {"1", "e", "m", "f"};
  std::vector<std::tuple<std::string, std::string, std::string, int>> rules;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) rules.emplace_back(names[a], names[b], names[a ^ b], 1);
  return make_ring(names, "1", rules);
}

CycNumber golden(const FieldPtr& f5) {
  return -(CycNumber::root_of_unity(f5, 2) + CycNumber::root_of_unity(f5, 3));
}

SystemFile fusion_file(std::string name, FusionSystem s, std::string provenance, std::string section) {
  SystemFile f;
  f.name = std::move(name);
  f.system.base = std::move(s);
  f.metadata = {std::move(provenance), std::move(section)};
  return f;
}

SystemFile make_fibonacci(bool yang_lee) {
  const FieldPtr f5 = CycField::get(5);
  const CycNumber phi = golden(f5);
  const CycNumber d = yang_lee ? CycNumber::one(f5) - phi : phi;
  return fusion_file(yang_lee ? "yang-lee" : "fibonacci", fibonacci_family(d),
                     yang_lee ? "F: closed-form family with d = 1 - phi, the second root of d^2 = 1 + d"
                              : "F: closed-form family with d = phi = -z^2 - z^3, the positive root of d^2 = 1 + d",
                     "Fibonacci and Yang-Lee family; Galois orbit of the Fibonacci theory");
}

SystemFile make_fibonacci_modular(bool yang_lee) {
  SystemFile f = make_fibonacci(yang_lee);
  f.name += "-modular";
  f.modular = true;
  f.system.base = lift_system(f.system.base, 20);
  const FieldPtr f20 = CycField::get(20);
  trivial_braiding(f.system);
  set_R(f.system, "x", "x", "1", CycNumber::root_of_unity(f20, yang_lee ? 4 : 12));
  set_R(f.system, "x", "x", "x", CycNumber::root_of_unity(f20, yang_lee ? 2 : 6));
  f.metadata.provenance += "; R: exhaustive hexagon search over pairs of 20th roots of unity; epsilon: pivotal evaluation";
  return f;
}

SystemFile make_su2_level2() {
  const FieldPtr f8 = CycField::get(8);
  FusionSystem s = FusionSystem::trivial(su2_level2_ring(), f8);
  const CycNumber sqrt2 = CycNumber::root_of_unity(f8, 1) + CycNumber::root_of_unity(f8, 7);
  const CycNumber h = -(sqrt2 / CycNumber(f8, Rational(2)));
  const FusionRing& r = s.ring;
  FieldMatrix big(f8, 2, 2);
  big(0, 0) = h;
  big(0, 1) = h;
  big(1, 0) = h;
  big(1, 1) = -h;
  s.F.at(Quad{L(r, "x1"), L(r, "x1"), L(r, "x1"), L(r, "x1")}) = big;
  const CycNumber minus = CycNumber(f8, Rational(-1));
  set_scalar(s, "x2", "x1", "x2", "x1", minus);
  set_scalar(s, "x1", "x2", "x1", "x2", minus);
  SystemFile f = fusion_file("su2-level2", std::move(s),
                             "F: three printed blocks with sqrt(2) = z + z^-1; other 1x1 cells from a +-1 pentagon search",
                             "SU(2) level 2 data and its tau-twist");
  f.grading = Grading{2, {0, 1, 0}};
  return f;
}

SystemFile make_ising() {
  SystemFile base = make_su2_level2();
  const CycNumber tau(base.fusion().field, Rational(-1));
  SystemFile f = fusion_file("ising", tau_twist(base.fusion(), *base.grading, tau),
                             "F: tau-twist of su2-level2 with tau = -1 and grading (0,1,0)",
                             "SU(2) level 2 data and its tau-twist");
  f.grading = base.grading;
  return f;
}

SystemFile make_toric_code() {
  const FieldPtr q = CycField::get(1);
  SystemFile f = fusion_file("toric-code", FusionSystem::trivial(toric_ring(), q),
                             "F: trivial cocycle; R: bicharacter (-1)^(a1 b2) from a hexagon search over {+-1, +-i}; "
                             "epsilon and sqrt_u: all 1",
                             "toric code as the quantum double of Z2");
  f.modular = true;
  trivial_braiding(f.system);
  // Labels 1, e, m, f are the Z2 x Z2 elements 00, 10, 01, 11.
  for (Label a = 0; a < 4; ++a)
    for (Label b = 0; b < 4; ++b) {
      const int sign = ((a & 1) && (b & 2)) ? -1 : 1;
      f.system.R[Triple{a, b, static_cast<Label>(a ^ b)}] = FieldMatrix::scalar(CycNumber(q, Rational(sign)), 1);
    }
  f.system.sqrt_u = std::vector<CycNumber>(4, CycNumber::one(q));
  return f;
}

SystemFile make_z2(bool semion) {
  const FieldPtr q = CycField::get(1);
  FusionSystem s = FusionSystem::trivial(z2_ring(), q);
  if (semion) set_scalar(s, "x", "x", "x", "x", CycNumber(q, Rational(-1)));
  SystemFile f = fusion_file(semion ? "z2-semion" : "z2-trivial", std::move(s),
                             semion ? "F: the nontrivial +-1 cocycle on Z2" : "F: the trivial cocycle on Z2",
                             "pointed fusion categories over Z2");
  f.grading = Grading{2, {0, 1}};
  return f;
}

SystemFile make_z2_semion_modular() {
  SystemFile f = make_z2(true);
  f.name = "z2-semion-modular";
  f.modular = true;
  const FieldPtr f4 = CycField::get(4);
  f.system.base = lift_system(f.system.base, 4);
  trivial_braiding(f.system);
  const CycNumber i = CycNumber::root_of_unity(f4, 1);
  set_R(f.system, "x", "x", "1", i);
  f.system.epsilon = {1, -1};
  f.system.sqrt_u = std::vector<CycNumber>{CycNumber::one(f4), i};
  f.metadata.provenance += "; R: hexagon search over 4th roots of unity; epsilon: both signs satisfy the pivotal equation, -1 taken so that q_x = 1 with sqrt_u = i";
  return f;
}

const std::map<std::string, std::function<SystemFile()>>& builders() {
  static const std::map<std::string, std::function<SystemFile()>> table = {
      {"fibonacci", [] { return make_fibonacci(false); }},
      {"yang-lee", [] { return make_fibonacci(true); }},
      {"su2-level2", make_su2_level2},
      {"ising", make_ising},
      {"toric-code", make_toric_code},
      {"z2-trivial", [] { return make_z2(false); }},
      {"z2-semion", [] { return make_z2(true); }},
      {"fibonacci-modular", [] { return make_fibonacci_modular(false); }},
      {"yang-lee-modular", [] { return make_fibonacci_modular(true); }},
      {"z2-semion-modular", make_z2_semion_modular},
  };
  return table;
}

}  // namespace

FusionSystem fibonacci_family(const CycNumber& d) {
  const FieldPtr& f = d.field();
  FusionSystem s = FusionSystem::trivial(fibonacci_ring(), f);
  const CycNumber one = CycNumber::one(f);
  FieldMatrix m(f, 2, 2);
  m(0, 0) = d - one;
  m(0, 1) = d + one;
  m(1, 0) = CycNumber(f, Rational(2)) * d - CycNumber(f, Rational(3));
  m(1, 1) = one - d;
  s.F.at(Quad{1, 1, 1, 1}) = m;
  return s;
}

std::vector<std::string> catalog_names(bool include_variants) {
  std::vector<std::string> out = {"fibonacci", "yang-lee", "su2-level2", "ising", "toric-code", "z2-trivial", "z2-semion"};
  if (include_variants)
    for (const char* v : {"fibonacci-modular", "yang-lee-modular", "z2-semion-modular"}) out.emplace_back(v);
  return out;
}

SystemFile catalog(const std::string& name) {
  auto it = builders().find(name);
  if (it == builders().end()) throw SchemaError("unknown catalog entry '" + name + "'");
  return it->second();
}

SystemFile resolve_system(const std::string& ref) {
  const std::string prefix = "catalog:";
  if (ref.rfind(prefix, 0) == 0) return catalog(ref.substr(prefix.size()));
  return load_system(ref);
}

}  // namespace fsys
