#include "fsys/galois_twist.hpp"

#include <algorithm>

#include "fsys/errors.hpp"

namespace fsys {

FusionSystem twist_system(const FusionSystem& s, long long k) {
  if (gcd_ll(k, s.field->order()) != 1)
    throw InvalidAutomorphism("k = " + std::to_string(k) + " is not a unit mod " + std::to_string(s.field->order()));
  FusionSystem out{s.ring, s.field, {}};
  for (const auto& [q, m] : s.F) out.F.emplace(q, m.map([k](const CycNumber& x) { return galois_apply(k, x); }));
  return out;
}

ModularSystem twist_system(const ModularSystem& m, long long k) {
  ModularSystem out;
  out.base = twist_system(m.base, k);
  auto sigma = [k](const CycNumber& x) { return galois_apply(k, x); };
  for (const auto& [t, r] : m.R) out.R.emplace(t, r.map(sigma));
  out.epsilon = m.epsilon;
  if (m.sqrt_u) {
    std::vector<CycNumber> l;
    for (const auto& x : *m.sqrt_u) l.push_back(sigma(x));
    out.sqrt_u = std::move(l);
  }
  return out;
}

std::vector<int> galois_group(int order) {
  std::vector<int> out;
  for (int k = 1; k <= std::max(order, 1); ++k)
    if (gcd_ll(k, order) == 1 && (k < order || order == 1)) out.push_back(k);
  return out;
}

namespace {

template <typename System, typename Same>
OrbitReport build_orbit(const System& s, int order, Same&& same, std::string method) {
  OrbitReport rep;
  rep.order = order;
  rep.automorphisms = galois_group(order);
  rep.method = std::move(method);
  std::vector<System> reps;
  for (int k : rep.automorphisms) {
    System t = twist_system(s, k);
    int cls = -1;
    for (size_t c = 0; c < reps.size() && cls < 0; ++c)
      if (same(reps[c], t, rep)) cls = static_cast<int>(c);
    if (cls < 0) {
      cls = static_cast<int>(reps.size());
      reps.push_back(std::move(t));
      rep.representatives.push_back(k);
    }
    rep.class_of.push_back(cls);
  }
  return rep;
}

}  // namespace

OrbitReport galois_orbit(const FusionSystem& s) {
  if (s.ring.is_multiplicity_free())
    return build_orbit(
        s, s.field->order(),
        [](const FusionSystem& x, const FusionSystem& y, OrbitReport&) {
          return decide_gauge_equiv(x, y).verdict == Verdict::equivalent;
        },
        "gauge invariants");
  return build_orbit(
      s, s.field->order(), [](const FusionSystem& x, const FusionSystem& y, OrbitReport&) { return x == y; },
      "exact equality");
}

OrbitReport galois_orbit(const ModularSystem& m) {
  if (m.ring().is_multiplicity_free())
    return build_orbit(
        m, m.field()->order(),
        [](const ModularSystem& x, const ModularSystem& y, OrbitReport& rep) {
          if (x == y) return true;
          const auto v = decide_gauge_equiv(x, y);
          if (v.verdict != Verdict::equivalent) return false;
          rep.partial = rep.partial || v.braiding_partial;
          return true;
        },
        "gauge invariants");
  return build_orbit(
      m, m.field()->order(), [](const ModularSystem& x, const ModularSystem& y, OrbitReport&) { return x == y; },
      "exact equality");
}

CheckResult validate_grading(const FusionRing& r, const Grading& g) {
  CheckResult res;
  res.name = "grading";
  if (g.modulus < 1) {
    res.fail("modulus must be positive");
    return res;
  }
  if (g.degree.size() != r.rank()) {
    res.fail("grading must give one degree per label");
    return res;
  }
  for (Label a = 0; a < static_cast<Label>(r.rank()); ++a) {
    ++res.instances;
    const int d = g.degree[static_cast<size_t>(a)];
    if (d < 0 || d >= g.modulus) res.fail("degree of " + r.name(a) + " is out of range");
  }
  if (!res.ok()) return res;
  ++res.instances;
  if (g.degree[static_cast<size_t>(r.unit())] != 0) res.fail("unit has nonzero degree");
  const auto L = static_cast<Label>(r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c) {
        if (r.N(a, b, c) == 0) continue;
        ++res.instances;
        if ((g.degree[static_cast<size_t>(a)] + g.degree[static_cast<size_t>(b)]) % g.modulus !=
            g.degree[static_cast<size_t>(c)])
          res.fail("deg(" + r.name(c) + ") != deg(" + r.name(a) + ") + deg(" + r.name(b) + ")");
      }
  return res;
}

FusionSystem tau_twist(const FusionSystem& s, const Grading& g, const CycNumber& tau) {
  const auto check = validate_grading(s.ring, g);
  if (!check.ok()) throw SchemaError("invalid grading: " + check.witness);
  if (!tau.pow(g.modulus).is_one()) throw SchemaError("tau^" + std::to_string(g.modulus) + " != 1");
  const int order = static_cast<int>(lcm_ll(s.field->order(), tau.field()->order()));
  FusionSystem out = lift_system(s, order);
  const CycNumber t = lift_field(tau, order);
  auto deg = [&](Label x) { return g.degree[static_cast<size_t>(x)]; };
  for (auto& [q, m] : out.F) {
    const int exponent = deg(q[0]) * ((deg(q[1]) + deg(q[2])) / g.modulus);
    if (exponent != 0) m = m.scaled(t.pow(exponent));
  }
  return out;
}

}  // namespace fsys
