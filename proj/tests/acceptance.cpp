// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fsys/catalog.hpp"
#include "fsys/cli.hpp"
#include "fsys/errors.hpp"
#include "oracles.hpp"

using namespace fsys;

namespace {

struct Failure {
  std::string what;
};

#define REQUIRE(cond, msg)                                   \
  do {                                                       \
    if (!(cond)) {                                           \
      std::ostringstream os_;                                \
      os_ << __LINE__ << ": " << msg;                        \
      throw Failure{os_.str()};                              \
    }                                                        \
  } while (0)

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Label L(const FusionRing& r, const char* name) { return *r.find(name); }

CycNumber golden5() {
  const FieldPtr f5 = CycField::get(5);
  return -(CycNumber::root_of_unity(f5, 2) + CycNumber::root_of_unity(f5, 3));
}

// The closed-form family written out here rather than taken from the catalog.
FusionSystem family(const CycNumber& d) {
  const FieldPtr f = d.field();
  const auto r = make_ring({"1", "x"}, "1", {{"1", "1", "1", 1}, {"1", "x", "x", 1}, {"x", "1", "x", 1},
                                             {"x", "x", "1", 1}, {"x", "x", "x", 1}});
  FusionSystem s = FusionSystem::trivial(r, f);
  FieldMatrix m(f, 2, 2);
  const CycNumber one = CycNumber::one(f);
  m(0, 0) = d - one;
  m(0, 1) = d + one;
  m(1, 0) = CycNumber(f, Rational(2)) * d - CycNumber(f, Rational(3));
  m(1, 1) = one - d;
  s.F.at(Quad{1, 1, 1, 1}) = m;
  return s;
}

std::vector<CycNumber> both_roots() {
  const CycNumber phi = golden5();
  return {phi, CycNumber::one(phi.field()) - phi};
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& d : both_roots()) {
    REQUIRE(d * d == CycNumber::one(d.field()) + d, "d^2 != 1 + d");
    const FusionSystem s = family(d);
    REQUIRE(s == fibonacci_family(d), "catalog family differs from the closed form");
    REQUIRE(check_triangle(s).ok(), "triangle fails");
    REQUIRE(check_duality(s).ok(), "duality fails");
    REQUIRE(check_pentagon(s).status == Status::pass, "pentagon fails: " << check_pentagon(s).witness);
  }
  const double t = seconds_since(t0);
  REQUIRE(t < 1.0, "runtime " << t << " s");
}

void criterion2() {
  for (const auto& d : both_roots()) {
    const FusionSystem s = family(d);
    const CycNumber one = CycNumber::one(d.field());
    std::vector<std::function<void(FusionSystem&)>> perturb = {
        [&](FusionSystem& x) { x.F.at(Quad{1, 1, 1, 0})(0, 0) += one; },
        [&](FusionSystem& x) { x.F.at(Quad{1, 1, 1, 1})(0, 0) += one; },
        [&](FusionSystem& x) { x.F.at(Quad{1, 1, 1, 1})(0, 1) += one; },
        [&](FusionSystem& x) { x.F.at(Quad{1, 1, 1, 1})(1, 0) += one; },
        [&](FusionSystem& x) { x.F.at(Quad{1, 1, 1, 1})(1, 1) += one; },
    };
    for (size_t k = 0; k < perturb.size(); ++k) {
      FusionSystem x = s;
      perturb[k](x);
      const CheckResult c = check_pentagon(x);
      REQUIRE(c.status == Status::fail, "perturbation " << k << " not detected");
      REQUIRE(c.violations > 0 && !c.witness.empty(), "perturbation " << k << " has no witness");
    }
  }
}

void criterion3() {
  for (const char* name : {"fibonacci", "yang-lee"}) {
    const SystemFile f = catalog(name);
    const FusionSystem& s = f.fusion();
    const FieldPtr& fld = s.field;
    const CycNumber z = s.F.at(Quad{1, 1, 1, 0})(0, 0);
    const FieldMatrix& m = s.F.at(Quad{1, 1, 1, 1});
    const CycNumber& z11 = m(0, 0);
    const CycNumber& z12 = m(0, 1);
    const CycNumber& z21 = m(1, 0);
    const CycNumber& z22 = m(1, 1);
    REQUIRE(z == CycNumber::one(fld), name << ": z != 1");
    REQUIRE(z11 + z11 * z11 == CycNumber::one(fld), name << ": z11 + z11^2 != 1");
    REQUIRE(z11 == z12 * z21, name << ": z11 != z12 z21");
    REQUIRE(z11 == -z22, name << ": z11 != -z22");
  }
}

void criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : catalog_names(true)) {
    const SystemFile f = catalog(name);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const GaugeElement g = random_gauge(f.system.ring(), f.system.field(), seed);
      REQUIRE(is_normalized(g, f.system.ring()), name << " seed " << seed << ": gauge not normalized");
      if (f.modular) {
        const ModularSystem m = apply_gauge(f.system, g);
        const Report rep = verify_modular(m);
        REQUIRE(rep.outcome == Outcome::pass, name << " seed " << seed << ": gauged system fails verification");
        REQUIRE(decide_gauge_equiv(f.system, m).verdict == Verdict::equivalent, name << " seed " << seed);
      } else {
        const FusionSystem s = apply_gauge(f.fusion(), g);
        REQUIRE(verify_fusion(s).outcome == Outcome::pass, name << " seed " << seed << ": gauged system fails");
        REQUIRE(decide_gauge_equiv(f.fusion(), s).verdict == Verdict::equivalent, name << " seed " << seed);
      }
    }
  }
  const double t = seconds_since(t0);
  REQUIRE(t < 30.0, "runtime " << t << " s");
}

void criterion5() {
  for (auto [a, b] : {std::pair{"fibonacci", "yang-lee"}, std::pair{"su2-level2", "ising"}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = decide_gauge_equiv(catalog(a).fusion(), catalog(b).fusion());
    const double t = seconds_since(t0);
    REQUIRE(res.verdict == Verdict::inequivalent, a << " vs " << b << ": " << to_string(res.verdict));
    REQUIRE(!res.witness.empty(), a << " vs " << b << ": no witness");
    REQUIRE(t < 1.0, a << " vs " << b << " runtime " << t << " s");
  }
}

void criterion6() {
  const SystemFile su2 = catalog("su2-level2");
  const FusionSystem& s = su2.fusion();
  const FusionSystem t = tau_twist(s, *su2.grading, CycNumber(s.field, Rational(-1)));
  const FusionRing& r = s.ring;
  const Quad big{L(r, "x1"), L(r, "x1"), L(r, "x1"), L(r, "x1")};
  const Quad p2{L(r, "x2"), L(r, "x1"), L(r, "x2"), L(r, "x1")};
  const Quad p3{L(r, "x1"), L(r, "x2"), L(r, "x1"), L(r, "x2")};
  REQUIRE(t.field == s.field, "field changed");
  REQUIRE(t.F.at(big) == s.F.at(big).scaled(CycNumber(s.field, Rational(-1))), "2x2 block not negated");
  REQUIRE(t.F.at(big) != s.F.at(big), "2x2 block unchanged");
  REQUIRE(t.F.at(p2) == s.F.at(p2), "F_{x2x1x2}^{x1} changed");
  REQUIRE(t.F.at(p3) == s.F.at(p3), "F_{x1x2x1}^{x2} changed");
  REQUIRE(verify_fusion(t).outcome == Outcome::pass, "twisted system fails verification");
  const auto res = decide_gauge_equiv(t, catalog("ising").fusion());
  REQUIRE(res.verdict == Verdict::equivalent, "twist vs ising: " << to_string(res.verdict) << " " << res.witness);
}

void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fib = galois_orbit(catalog("fibonacci").fusion());
  REQUIRE(fib.automorphisms.size() == 4 && fib.class_count() == 2, "fibonacci: " << fib.class_count() << " classes");
  const auto fibm = galois_orbit(catalog("fibonacci-modular").system);
  REQUIRE(fibm.order == 20, "fibonacci-modular field order " << fibm.order);
  REQUIRE(fibm.automorphisms.size() == 8 && fibm.class_count() == 4,
          "fibonacci-modular: " << fibm.class_count() << " classes");
  const auto toric = galois_orbit(catalog("toric-code").system);
  REQUIRE(toric.class_count() == 1, "toric-code: " << toric.class_count() << " classes");
  const double t = seconds_since(t0);
  REQUIRE(t < 60.0, "runtime " << t << " s");
}

void criterion8() {
  const ModularSystem m = catalog("fibonacci-modular").system;
  const FieldPtr f20 = CycField::get(20);
  REQUIRE(m.field() == f20, "field is not Q(zeta_20)");
  REQUIRE(check_hexagon_R(m).status == Status::pass, "hexagon (R) fails");
  REQUIRE(check_hexagon_Q(m).status == Status::pass, "hexagon (Q) fails");
  REQUIRE(m.epsilon == std::vector<int>({1, 1}), "epsilon is not (+1,+1)");
  REQUIRE(check_pivotal(m).status == Status::pass, "pivotal fails");
  const CycNumber d = -(CycNumber::root_of_unity(f20, 8) + CycNumber::root_of_unity(f20, 12));
  REQUIRE(d * d == CycNumber::one(f20) + d, "d^2 != 1 + d");
  FieldMatrix expect(f20, 2, 2);
  expect(0, 0) = CycNumber::one(f20);
  expect(0, 1) = CycNumber::one(f20);
  expect(1, 0) = CycNumber::one(f20);
  expect(1, 1) = d - CycNumber(f20, Rational(2));
  const FieldMatrix s_hat = compute_S_hat(m);
  REQUIRE(s_hat == expect, "S-hat differs");
  const CycNumber det = determinant(s_hat);
  REQUIRE(det == d - CycNumber(f20, Rational(3)) && !det.is_zero(), "det S-hat = " << det.to_string());
  REQUIRE(check_modularity(s_hat).status == Status::pass, "modularity check fails");
  const auto found = oracle::fibonacci_hexagon_search(m);
  const std::vector<std::pair<int, int>> expected = {{8, 14}, {12, 6}};
  REQUIRE(found == expected, "search found " << found.size() << " pairs");
  // Conjugate pair: sigma_{-1} swaps the two solutions.
  for (auto [p, q] : found) {
    const auto c = std::pair{(20 - p) % 20, (20 - q) % 20};
    REQUIRE(std::find(found.begin(), found.end(), c) != found.end(), "pair not closed under conjugation");
  }
}

void criterion9() {
  for (const char* name : {"fibonacci", "ising", "toric-code"}) {
    const auto w = hyperring_words(catalog(name).fusion());
    const IntMatrix kb = kernel_basis(w);
    const IntMatrix ref = oracle::saturated_nullspace(oracle::exponent_matrix(w), w.nonzero.size());
    REQUIRE(oracle::same_lattice(kb, ref, w.nonzero.size()), name << ": lattices differ (" << kb.size() << " vs "
                                                                    << ref.size() << " generators)");
  }
}

void criterion10() {
  for (const auto& name : catalog_names(true)) {
    const SystemFile f = catalog(name);
    const auto base = f.modular ? intrinsic_data(f.system) : intrinsic_data(f.fusion());
    REQUIRE(!base.rational.empty(), name << ": no rational data");
    for (int k : galois_group(f.system.field()->order())) {
      const auto tw = f.modular ? intrinsic_data(twist_system(f.system, k)) : intrinsic_data(twist_system(f.fusion(), k));
      REQUIRE(tw.rational == base.rational, name << " sigma_" << k << ": rational data changed");
    }
  }
}

std::string run(const std::vector<std::string>& args, int* code) {
  std::vector<const char*> argv = {"fsys"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  *code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

void criterion11() {
  const auto dir = std::filesystem::temp_directory_path() / "fsys_acceptance";
  std::filesystem::create_directories(dir);
  for (const auto& name : catalog_names(true)) {
    const SystemFile f = catalog(name);
    const std::string path = (dir / (name + ".fsys")).string();
    save_system(f, path);
    const SystemFile once = load_system(path);
    REQUIRE(once == f, name << ": load(save(x)) != x");
    save_system(once, path);
    const SystemFile twice = load_system(path);
    REQUIRE(twice == once, name << ": load . save . load not identity");
    REQUIRE(serialize_system(twice) == serialize_system(f), name << ": serialization not stable");
  }
  std::filesystem::remove_all(dir);

  std::vector<std::vector<std::string>> commands;
  for (const auto& name : catalog_names(true)) commands.push_back({"--json", "verify", "catalog:" + name});
  commands.push_back({"--json", "equiv", "catalog:fibonacci", "catalog:yang-lee"});
  commands.push_back({"--json", "orbit", "catalog:fibonacci"});
  commands.push_back({"--json", "intrinsic", "catalog:toric-code"});
  for (const auto& c : commands) {
    int c1 = 0, c2 = 0;
    const std::string a = run(c, &c1);
    const std::string b = run(c, &c2);
    REQUIRE(!a.empty() && a == b && c1 == c2, "non-deterministic report for " << c[1] << " " << c[2]);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"fibonacci family passes triangle, duality, pentagon", criterion1},
      {"pentagon detects every single-entry perturbation", criterion2},
      {"fibonacci consequences from stored data", criterion3},
      {"gauge soundness over 20 seeds per catalog entry", criterion4},
      {"fibonacci/yang-lee and su2-level2/ising discriminated", criterion5},
      {"tau-twist of su2-level2 reproduces ising", criterion6},
      {"galois orbit class counts", criterion7},
      {"fibonacci modular verification and hexagon search", criterion8},
      {"kernel basis matches rational nullspace oracle", criterion9},
      {"rational intrinsic data invariant under galois twists", criterion10},
      {"round trip and deterministic json", criterion11},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << timing << ")";
    if (!ok) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failed;
  }
  std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
