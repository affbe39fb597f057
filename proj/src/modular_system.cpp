#include "fsys/modular_system.hpp"

#include <sstream>

#include "fsys/errors.hpp"

namespace fsys {

namespace {

std::string names(const FusionRing& r, std::initializer_list<Label> labels) {
  std::string out = "(";
  bool first = true;
  for (auto l : labels) {
    if (!first) out += ",";
    out += r.name(l);
    first = false;
  }
  return out + ")";
}

const CycNumber& rat(const std::map<Triple, FieldMatrix>& family, Label a, Label b, Label c, int i, int j) {
  auto it = family.find(Triple{a, b, c});
  if (it == family.end()) throw SchemaError("missing braiding block");
  return it->second(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1));
}

// Both hexagon families share one shape; only the braiding family differs.
CheckResult check_hexagon_family(const ModularSystem& m, const std::map<Triple, FieldMatrix>& B,
                                 const std::string& name) {
  CheckResult res;
  res.name = name;
  const FusionSystem& s = m.base;
  const FusionRing& r = s.ring;
  const auto L = static_cast<Label>(r.rank());
  const CycNumber zero = CycNumber::zero(s.field);
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c)
        for (Label u = 0; u < L; ++u)
          for (Label d = 0; d < L; ++d) {
            if (r.N(c, a, d) == 0 || r.N(d, b, u) == 0) continue;
            for (Label dp = 0; dp < L; ++dp) {
              if (r.N(a, dp, u) == 0 || r.N(b, c, dp) == 0) continue;
              for (int i = 1; i <= r.N(c, a, d); ++i)
                for (int j = 1; j <= r.N(d, b, u); ++j)
                  for (int ip = 1; ip <= r.N(a, dp, u); ++ip)
                    for (int jp = 1; jp <= r.N(b, c, dp); ++jp) {
                      ++res.instances;
                      CycNumber lhs = zero;
                      for (int x = 1; x <= r.N(a, c, d); ++x)
                        for (int y = 1; y <= r.N(c, b, dp); ++y)
                          lhs += rat(B, a, c, d, i, x) * s.entry(a, c, b, u, x, d, j, ip, dp, y) *
                                 rat(B, b, c, dp, y, jp);
                      CycNumber rhs = zero;
                      for (Label e = 0; e < L; ++e) {
                        if (r.N(c, e, u) == 0 || r.N(a, b, e) == 0 || r.N(e, c, u) == 0) continue;
                        for (int ipp = 1; ipp <= r.N(c, e, u); ++ipp)
                          for (int jpp = 1; jpp <= r.N(a, b, e); ++jpp)
                            for (int w = 1; w <= r.N(e, c, u); ++w)
                              rhs += s.entry(c, a, b, u, i, d, j, ipp, e, jpp) * rat(B, e, c, u, ipp, w) *
                                     s.entry(a, b, c, u, jpp, e, w, ip, dp, jp);
                      }
                      if (lhs != rhs) {
                        std::ostringstream os;
                        os << "(a,b,c,u,d,d')=" << names(r, {a, b, c, u, d, dp}) << " (i,j,i',j')=(" << i << ","
                           << j << "," << ip << "," << jp << "): lhs=" << lhs.to_string()
                           << " rhs=" << rhs.to_string();
                        res.fail(os.str());
                      }
                    }
            }
          }
  return res;
}

}  // namespace

ModularSystem lift_system(const ModularSystem& m, int order) {
  ModularSystem out;
  out.base = lift_system(m.base, order);
  auto lift = [&](const CycNumber& x) { return lift_field(x, order); };
  for (const auto& [t, mat] : m.R) out.R.emplace(t, mat.map(lift));
  out.epsilon = m.epsilon;
  if (m.sqrt_u) {
    std::vector<CycNumber> l;
    for (const auto& x : *m.sqrt_u) l.push_back(lift(x));
    out.sqrt_u = std::move(l);
  }
  return out;
}

std::map<Triple, FieldMatrix> compute_Q(const ModularSystem& m) {
  std::map<Triple, FieldMatrix> Q;
  for (const auto& [t, mat] : m.R) {
    auto it = m.R.find(Triple{t[1], t[0], t[2]});
    if (it == m.R.end()) throw SchemaError("missing R block for the reversed pair");
    Q.emplace(t, matrix_inverse(it->second));
  }
  return Q;
}

CheckResult check_commutativity(const FusionRing& r) {
  CheckResult res;
  res.name = "commutativity";
  const auto L = static_cast<Label>(r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c) {
        ++res.instances;
        if (r.N(a, b, c) != r.N(b, a, c))
          res.fail("N_{ab}^c != N_{ba}^c at (a,b,c)=" + names(r, {a, b, c}));
      }
  return res;
}

CheckResult check_braiding_data(const ModularSystem& m) {
  CheckResult res;
  res.name = "braiding-data";
  const FusionRing& r = m.ring();
  const auto L = static_cast<Label>(r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c) {
        const int n = r.N(a, b, c);
        auto it = m.R.find(Triple{a, b, c});
        if (n == 0) {
          if (it != m.R.end()) res.fail("R block given for inadmissible triple " + names(r, {a, b, c}));
          continue;
        }
        ++res.instances;
        if (it == m.R.end()) {
          res.fail("missing R-matrix for admissible triple " + names(r, {a, b, c}));
        } else if (it->second.rows() != static_cast<size_t>(n) || it->second.cols() != static_cast<size_t>(n)) {
          res.fail("R" + names(r, {a, b, c}) + " has the wrong size");
        } else if (it->second.field() != m.field()) {
          res.fail("R" + names(r, {a, b, c}) + " lives in a different field");
        } else if (!is_invertible(it->second)) {
          res.fail("R" + names(r, {a, b, c}) + " is singular");
        }
      }
  ++res.instances;
  if (m.epsilon.size() != r.rank()) {
    res.fail("epsilon must have one sign per label");
  } else {
    for (Label a = 0; a < L; ++a)
      if (m.epsilon[static_cast<size_t>(a)] != 1 && m.epsilon[static_cast<size_t>(a)] != -1)
        res.fail("epsilon_" + r.name(a) + " is not +-1");
  }
  return res;
}

CheckResult check_hexagon_R(const ModularSystem& m) { return check_hexagon_family(m, m.R, "hexagon-R"); }

CheckResult check_hexagon_Q(const ModularSystem& m) {
  return check_hexagon_family(m, compute_Q(m), "hexagon-Q");
}

CheckResult audit_unit_braiding(const ModularSystem& m) {
  CheckResult res;
  res.name = "unit-braiding";
  const FusionRing& r = m.ring();
  const Label one = r.unit();
  const auto Q = compute_Q(m);
  for (Label a = 0; a < static_cast<Label>(r.rank()); ++a) {
    for (const Triple& t : {Triple{a, one, a}, Triple{one, a, a}}) {
      res.instances += 2;
      if (!m.R.at(t).is_identity()) res.fail("R" + names(r, {t[0], t[1], t[2]}) + " != 1");
      if (!Q.at(t).is_identity()) res.fail("Q" + names(r, {t[0], t[1], t[2]}) + " != 1");
    }
  }
  return res;
}

CheckResult check_pivotal(const ModularSystem& m) {
  CheckResult res;
  res.name = "pivotal";
  const FusionSystem& s = m.base;
  const FusionRing& r = s.ring;
  const auto L = static_cast<Label>(r.rank());
  const Label one = r.unit();
  const CycNumber zero = CycNumber::zero(s.field);
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c) {
        const Label as = r.dual(a), bs = r.dual(b), cs = r.dual(c);
        const int sign = m.epsilon[static_cast<size_t>(c)] * m.epsilon[static_cast<size_t>(a)] *
                         m.epsilon[static_cast<size_t>(b)];
        const CycNumber expected(s.field, Rational(sign));
        for (int i = 1; i <= r.N(a, b, c); ++i) {
          ++res.instances;
          CycNumber sum = zero;
          for (int sidx = 1; sidx <= r.N(b, cs, as); ++sidx)
            for (int t = 1; t <= r.N(cs, a, bs); ++t)
              sum += s.entry(a, b, cs, one, i, c, 1, 1, as, sidx) * s.entry(b, cs, a, one, sidx, as, 1, 1, bs, t) *
                     s.entry(cs, a, b, one, t, bs, 1, 1, c, i);
          if (sum != expected) {
            std::ostringstream os;
            os << "(a,b,c)=" << names(r, {a, b, c}) << " i=" << i << ": sum=" << sum.to_string()
               << " expected " << sign;
            res.fail(os.str());
          }
        }
      }
  return res;
}

FieldMatrix compute_S_hat(const ModularSystem& m) {
  const FusionSystem& s = m.base;
  const FusionRing& r = s.ring;
  const auto L = static_cast<Label>(r.rank());
  const Label one = r.unit();
  const auto G = compute_G(s).G;
  FieldMatrix out(s.field, r.rank(), r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b) {
      const Label bs = r.dual(b);
      const Quad q{a, bs, b, a};
      const FieldMatrix& g = G.at(q);
      const FieldMatrix& f = s.F.at(q);
      // (1 1 1) is an a(bc) channel: a row label of G, a column label of F.
      const size_t unit = r.col(a, bs, b, a, 1, one, 1);
      CycNumber sum = CycNumber::zero(s.field);
      for (Label c = 0; c < L; ++c)
        for (int i = 1; i <= r.N(a, bs, c); ++i)
          for (int j = 1; j <= r.N(c, b, a); ++j)
            for (int ip = 1; ip <= r.N(bs, a, c); ++ip)
              for (int ipp = 1; ipp <= r.N(a, bs, c); ++ipp)
                sum += g(unit, r.row(a, bs, b, a, i, c, j)) * rat(m.R, bs, a, c, i, ip) *
                       rat(m.R, a, bs, c, ip, ipp) * f(r.row(a, bs, b, a, ipp, c, j), unit);
      out(static_cast<size_t>(a), static_cast<size_t>(b)) = sum;
    }
  return out;
}

CheckResult audit_S_hat_symmetry(const FieldMatrix& s_hat, const FusionRing& r) {
  CheckResult res;
  res.name = "s-hat-symmetry";
  for (size_t a = 0; a < s_hat.rows(); ++a)
    for (size_t b = a + 1; b < s_hat.cols(); ++b) {
      ++res.instances;
      if (s_hat(a, b) != s_hat(b, a)) {
        if (res.violations++ == 0)
          res.witness = "S-hat(" + r.name(static_cast<Label>(a)) + "," + r.name(static_cast<Label>(b)) +
                        ") != S-hat(" + r.name(static_cast<Label>(b)) + "," + r.name(static_cast<Label>(a)) + ")";
        res.status = Status::warning;
      }
    }
  return res;
}

CheckResult check_modularity(const FieldMatrix& s_hat) {
  CheckResult res;
  res.name = "modularity";
  res.instances = 1;
  const CycNumber det = determinant(s_hat);
  res.value("det S-hat", det);
  if (det.is_zero()) res.fail("S-hat is singular");
  return res;
}

QuantumDimensions quantum_dimensions(const ModularSystem& m, const FieldMatrix& s_hat) {
  QuantumDimensions out;
  out.validation.name = "sqrt-u";
  if (!m.sqrt_u) {
    out.validation.status = Status::skipped;
    out.validation.notes.push_back("no square roots of u_a supplied: S-hat only");
    return out;
  }
  const FusionRing& r = m.ring();
  const auto& lambda = *m.sqrt_u;
  if (lambda.size() != r.rank()) {
    out.validation.fail("sqrt_u must have one entry per label");
    return out;
  }
  const auto u = duality_scalars(m.base);
  for (Label a = 0; a < static_cast<Label>(r.rank()); ++a) {
    ++out.validation.instances;
    const auto& la = lambda[static_cast<size_t>(a)];
    if (la.field() != m.field()) {
      out.validation.fail("lambda_" + r.name(a) + " lives in a different field");
    } else if (!u[static_cast<size_t>(a)] || la * la != *u[static_cast<size_t>(a)]) {
      out.validation.fail("lambda_" + r.name(a) + "^2 != u_" + r.name(a));
    }
  }
  if (!out.validation.ok()) return out;
  const size_t n = r.rank();
  FieldMatrix D(m.field(), n, n);
  for (Label a = 0; a < static_cast<Label>(n); ++a) {
    const CycNumber eps(m.field(), Rational(m.epsilon[static_cast<size_t>(a)]));
    const CycNumber q = eps / (lambda[static_cast<size_t>(a)] * lambda[static_cast<size_t>(r.dual(a))]);
    out.q.push_back(q);
    D(static_cast<size_t>(a), static_cast<size_t>(a)) = q;
    out.validation.value("q_" + r.name(a), q);
  }
  out.S = D * s_hat * D;
  out.available = true;
  return out;
}

namespace {

void add_rational(std::vector<RationalDatum>& out, const std::string& key, const CycNumber& x) {
  if (x.is_rational()) out.push_back({key, x.constant_term()});
}

void add_fusion_data(IntrinsicData& d, const FusionSystem& s) {
  d.ring = s.ring;
  for (const auto& u : duality_scalars(s)) d.u.push_back(u.value_or(CycNumber::zero(s.field)));
  for (Label a = 0; a < static_cast<Label>(d.u.size()); ++a)
    add_rational(d.rational, "u[" + s.ring.name(a) + "]", d.u[static_cast<size_t>(a)]);
}

}  // namespace

IntrinsicData intrinsic_data(const FusionSystem& s) {
  IntrinsicData d;
  add_fusion_data(d, s);
  return d;
}

IntrinsicData intrinsic_data(const ModularSystem& m) {
  IntrinsicData d;
  add_fusion_data(d, m.base);
  const FusionRing& r = m.ring();
  d.S_hat = compute_S_hat(m);
  for (size_t a = 0; a < r.rank(); ++a)
    for (size_t b = 0; b < r.rank(); ++b)
      add_rational(d.rational,
                   "S_hat[" + r.name(static_cast<Label>(a)) + "," + r.name(static_cast<Label>(b)) + "]",
                   (*d.S_hat)(a, b));
  auto qd = quantum_dimensions(m, *d.S_hat);
  if (qd.available) d.S = qd.S;
  for (const auto& [t, mat] : m.R) {
    auto cp = characteristic_polynomial(mat);
    const std::string key = "R[" + r.name(t[0]) + "," + r.name(t[1]) + "," + r.name(t[2]) + "].charpoly[";
    for (size_t k = 0; k < cp.size(); ++k) add_rational(d.rational, key + std::to_string(k) + "]", cp[k]);
    d.r_charpolys.emplace_back(t, std::move(cp));
  }
  return d;
}

Report verify_modular(const ModularSystem& m) {
  Report rep = verify_fusion(m.base);
  rep.subject = "modular";
  auto skip = [&](const std::string& name) {
    CheckResult c;
    c.name = name;
    c.status = Status::skipped;
    rep.add(std::move(c));
  };
  const std::vector<std::string> rest = {"commutativity", "braiding-data", "hexagon-R", "hexagon-Q",
                                         "unit-braiding", "pivotal",       "s-hat-symmetry", "modularity",
                                         "sqrt-u"};
  if (!rep.passed()) {
    for (const auto& n : rest) skip(n);
    return rep;
  }
  auto comm = check_commutativity(m.ring());
  const bool comm_ok = comm.ok();
  rep.add(std::move(comm));
  auto data = check_braiding_data(m);
  const bool data_ok = data.ok();
  rep.add(std::move(data));
  if (!comm_ok || !data_ok) {
    for (size_t k = 2; k < rest.size(); ++k) skip(rest[k]);
    return rep;
  }
  rep.add(check_hexagon_R(m));
  rep.add(check_hexagon_Q(m));
  rep.add(audit_unit_braiding(m));
  rep.add(check_pivotal(m));
  const FieldMatrix s_hat = compute_S_hat(m);
  rep.add(audit_S_hat_symmetry(s_hat, m.ring()));
  rep.add(check_modularity(s_hat));
  auto qd = quantum_dimensions(m, s_hat);
  if (!qd.available && qd.validation.status == Status::skipped) rep.notes.push_back("S-hat only: no sqrt_u given");
  rep.add(std::move(qd.validation));
  return rep;
}

}  // namespace fsys
