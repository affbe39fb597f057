#include "fsys/hyperring.hpp"

#include <algorithm>
#include <sstream>

#include "fsys/errors.hpp"

namespace fsys {

std::vector<Triple> hyperring_triples(const FusionRing& r) {
  if (!r.is_multiplicity_free()) throw SchemaError("ring has fusion multiplicities above 1");
  std::vector<Triple> T;
  const auto L = static_cast<Label>(r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label u = 0; u < L; ++u)
        if (r.N(a, b, u) == 1) T.push_back({a, b, u});
  return T;
}

HyperringWords hyperring_words(const FusionSystem& s) {
  const FusionRing& r = s.ring;
  HyperringWords w;
  w.T = hyperring_triples(r);
  auto pos = [&](Label a, Label b, Label u) {
    return static_cast<size_t>(std::lower_bound(w.T.begin(), w.T.end(), Triple{a, b, u}) - w.T.begin());
  };
  const auto L = static_cast<Label>(r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c)
        for (Label u = 0; u < L; ++u)
          for (Label d = 0; d < L; ++d) {
            if (r.N(a, b, d) == 0 || r.N(d, c, u) == 0) continue;
            for (Label e = 0; e < L; ++e) {
              if (r.N(b, c, e) == 0 || r.N(a, e, u) == 0) continue;
              const HyperringCell cell{a, b, c, d, e, u};
              std::vector<int> ex(w.T.size(), 0);
              ++ex[pos(a, b, d)];
              ++ex[pos(d, c, u)];
              --ex[pos(b, c, e)];
              --ex[pos(a, e, u)];
              w.values.push_back(s.entry(a, b, c, u, 1, d, 1, 1, e, 1));
              if (!w.values.back().is_zero()) w.nonzero.push_back(w.cells.size());
              w.cells.push_back(cell);
              w.exponents.push_back(std::move(ex));
            }
          }
  return w;
}

IntMatrix kernel_basis(const HyperringWords& w) {
  IntMatrix M(w.T.size(), IntVector(w.nonzero.size(), 0));
  for (size_t j = 0; j < w.nonzero.size(); ++j)
    for (size_t t = 0; t < w.T.size(); ++t) M[t][j] = w.exponents[w.nonzero[j]][t];
  return integer_kernel(M, w.nonzero.size());
}

std::vector<CycNumber> gauge_invariants(const HyperringWords& w, const IntMatrix& basis) {
  std::vector<CycNumber> out;
  for (const auto& k : basis) {
    CycNumber p = CycNumber::one(w.values.front().field());
    for (size_t j = 0; j < k.size(); ++j)
      if (k[j] != 0) p *= w.values[w.nonzero[j]].pow(k[j].get_si());
    out.push_back(std::move(p));
  }
  return out;
}

std::string cell_name(const FusionRing& r, const HyperringCell& c) {
  return "F[" + r.name(c.a) + "," + r.name(c.b) + "," + r.name(c.c) + "," + r.name(c.u) + ";" + r.name(c.d) + "," +
         r.name(c.e) + "]";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent:
      return "equivalent";
    case Verdict::inequivalent:
      return "inequivalent";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

namespace {

std::string describe(const FusionRing& r, const HyperringWords& w, const IntVector& k) {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    if (!first) os << " * ";
    os << cell_name(r, w.cells[w.nonzero[j]]);
    if (k[j] != 1) os << "^" << k[j].get_str();
    first = false;
  }
  return os.str();
}

void require_same_ring(const FusionRing& x, const FusionRing& y) {
  if (!(x == y)) throw SchemaError("systems are built on different fusion rings");
}

}  // namespace

EquivalenceResult decide_gauge_equiv(const FusionSystem& s1, const FusionSystem& s2) {
  require_same_ring(s1.ring, s2.ring);
  EquivalenceResult res;
  if (!s1.ring.is_multiplicity_free()) {
    res.verdict = Verdict::not_applicable;
    res.notes.push_back("fusion multiplicities above 1: no invariant procedure");
    return res;
  }
  const int order = static_cast<int>(lcm_ll(s1.field->order(), s2.field->order()));
  const FusionSystem x = lift_system(s1, order);
  const FusionSystem y = lift_system(s2, order);
  const auto wx = hyperring_words(x);
  const auto wy = hyperring_words(y);
  for (size_t i = 0; i < wx.cells.size(); ++i) {
    if (wx.values[i].is_zero() != wy.values[i].is_zero()) {
      res.verdict = Verdict::inequivalent;
      res.witness = "zero pattern differs at " + cell_name(x.ring, wx.cells[i]);
      return res;
    }
  }
  const IntMatrix basis = kernel_basis(wx);
  const auto ix = gauge_invariants(wx, basis);
  const auto iy = gauge_invariants(wy, basis);
  res.invariants = basis.size();
  for (size_t k = 0; k < basis.size(); ++k) {
    if (ix[k] != iy[k]) {
      res.verdict = Verdict::inequivalent;
      res.witness = "invariant " + describe(x.ring, wx, basis[k]) + ": " + ix[k].to_string() + " vs " +
                    iy[k].to_string();
      return res;
    }
  }
  res.verdict = Verdict::equivalent;
  return res;
}

EquivalenceResult decide_gauge_equiv(const ModularSystem& m1, const ModularSystem& m2) {
  EquivalenceResult res = decide_gauge_equiv(m1.base, m2.base);
  if (res.verdict != Verdict::equivalent) return res;
  const FusionRing& r = m1.ring();
  for (Label a = 0; a < static_cast<Label>(r.rank()); ++a) {
    if (m1.epsilon[static_cast<size_t>(a)] != m2.epsilon[static_cast<size_t>(a)]) {
      res.verdict = Verdict::inequivalent;
      res.witness = "pivotal sign of " + r.name(a) + " differs";
      return res;
    }
  }
  const int order = static_cast<int>(lcm_ll(m1.field()->order(), m2.field()->order()));
  auto value = [&](const ModularSystem& m, Label a, Label b, Label c) {
    return lift_field(m.R.at(Triple{a, b, c})(0, 0), order);
  };
  const auto L = static_cast<Label>(r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = a; b < L; ++b)
      for (Label c = 0; c < L; ++c) {
        if (r.N(a, b, c) == 0) continue;
        ++res.invariants;
        const CycNumber x = value(m1, a, b, c) * (a == b ? CycNumber::one(value(m1, a, b, c).field()) : value(m1, b, a, c));
        const CycNumber y = value(m2, a, b, c) * (a == b ? CycNumber::one(value(m2, a, b, c).field()) : value(m2, b, a, c));
        if (x != y) {
          res.verdict = Verdict::inequivalent;
          const std::string key = a == b ? "R_{" + r.name(a) + r.name(a) + "}^" + r.name(c)
                                         : "R_{" + r.name(a) + r.name(b) + "}^" + r.name(c) + " R_{" + r.name(b) +
                                               r.name(a) + "}^" + r.name(c);
          res.witness = key + ": " + x.to_string() + " vs " + y.to_string();
          return res;
        }
      }
  res.braiding_partial = true;
  res.notes.push_back("F data gauge equivalent; braidings indistinguishable by implemented invariants");
  return res;
}

}  // namespace fsys
