#include "fsys/fusion_system.hpp"

#include <sstream>

#include "fsys/errors.hpp"

namespace fsys {

namespace {

// Dense lookup of F blocks by quadruple, built once per check.
class BlockTable {
 public:
  explicit BlockTable(const FusionSystem& s) : n_(s.ring.rank()), table_(n_ * n_ * n_ * n_, nullptr) {
    for (const auto& [q, m] : s.F) table_[index(q[0], q[1], q[2], q[3])] = &m;
  }
  const FieldMatrix& operator()(Label a, Label b, Label c, Label u) const {
    const FieldMatrix* m = table_[index(a, b, c, u)];
    if (!m) throw SchemaError("missing F block");
    return *m;
  }

 private:
  size_t index(Label a, Label b, Label c, Label u) const {
    return ((static_cast<size_t>(a) * n_ + static_cast<size_t>(b)) * n_ + static_cast<size_t>(c)) * n_ +
           static_cast<size_t>(u);
  }
  size_t n_;
  std::vector<const FieldMatrix*> table_;
};

std::string tuple_name(const FusionRing& ring, std::initializer_list<Label> labels) {
  std::string out = "(";
  bool first = true;
  for (auto l : labels) {
    if (!first) out += ",";
    out += ring.name(l);
    first = false;
  }
  return out + ")";
}

}  // namespace

const FieldMatrix* FusionSystem::block(Label a, Label b, Label c, Label u) const {
  auto it = F.find(Quad{a, b, c, u});
  return it == F.end() ? nullptr : &it->second;
}

const CycNumber& FusionSystem::entry(Label a, Label b, Label c, Label u, int i, Label e, int j, int ip,
                                     Label ep, int jp) const {
  const FieldMatrix* m = block(a, b, c, u);
  if (!m) throw SchemaError("missing F block " + quad_name({a, b, c, u}));
  return (*m)(ring.row(a, b, c, u, i, e, j), ring.col(a, b, c, u, ip, ep, jp));
}

std::vector<Quad> FusionSystem::admissible_quads() const {
  std::vector<Quad> out;
  const auto n = static_cast<Label>(ring.rank());
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label u = 0; u < n; ++u)
          if (ring.N4(a, b, c, u) > 0) out.push_back({a, b, c, u});
  return out;
}

FusionSystem FusionSystem::trivial(FusionRing ring, FieldPtr field) {
  FusionSystem s{std::move(ring), std::move(field), {}};
  for (const auto& q : s.admissible_quads())
    s.F.emplace(q, FieldMatrix::identity(s.field, static_cast<size_t>(s.ring.N4(q[0], q[1], q[2], q[3]))));
  return s;
}

std::string FusionSystem::quad_name(const Quad& q) const {
  return tuple_name(ring, {q[0], q[1], q[2], q[3]});
}

FusionSystem lift_system(const FusionSystem& s, int order) {
  FusionSystem out{s.ring, CycField::get(order), {}};
  for (const auto& [q, m] : s.F) out.F.emplace(q, m.map([&](const CycNumber& x) { return lift_field(x, order); }));
  return out;
}

CheckResult check_blocks(const FusionSystem& s) {
  CheckResult res;
  res.name = "blocks";
  for (const auto& q : s.admissible_quads()) {
    ++res.instances;
    const auto dim = static_cast<size_t>(s.ring.N4(q[0], q[1], q[2], q[3]));
    const FieldMatrix* m = s.block(q[0], q[1], q[2], q[3]);
    if (!m) {
      res.fail("missing F-matrix for admissible quadruple " + s.quad_name(q));
    } else if (m->rows() != dim || m->cols() != dim) {
      res.fail("F" + s.quad_name(q) + " has size " + std::to_string(m->rows()) + "x" +
               std::to_string(m->cols()) + ", expected " + std::to_string(dim));
    } else if (m->field() != s.field) {
      res.fail("F" + s.quad_name(q) + " lives in a different field");
    }
  }
  for (const auto& [q, m] : s.F) {
    if (s.ring.N4(q[0], q[1], q[2], q[3]) == 0) res.fail("F block given for inadmissible quadruple " + s.quad_name(q));
  }
  return res;
}

CheckResult check_triangle(const FusionSystem& s) {
  CheckResult res;
  res.name = "triangle";
  const auto n = static_cast<Label>(s.ring.rank());
  const Label one = s.ring.unit();
  size_t derived_failures = 0;
  std::string derived_witness;
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label u = 0; u < n; ++u) {
        if (s.ring.N(a, b, u) == 0) continue;
        ++res.instances;
        const FieldMatrix* m = s.block(a, one, b, u);
        if (!m) {
          res.fail("missing F-matrix for admissible quadruple " + s.quad_name({a, one, b, u}));
          continue;
        }
        if (!m->is_identity()) res.fail("F" + s.quad_name({a, one, b, u}) + " is not the identity");
        for (const Quad& q : {Quad{one, a, b, u}, Quad{a, b, one, u}}) {
          const FieldMatrix* d = s.block(q[0], q[1], q[2], q[3]);
          if (d && !d->is_identity()) {
            if (derived_failures++ == 0) derived_witness = "F" + s.quad_name(q) + " is not the identity";
          }
        }
      }
  if (derived_failures > 0) {
    res.notes.push_back("derived unit identities F_{1ab}^u = I / F_{ab1}^u = I fail " +
                        std::to_string(derived_failures) + " time(s); first: " + derived_witness);
    if (res.status == Status::pass) res.status = Status::warning;
  }
  return res;
}

std::vector<std::optional<CycNumber>> duality_scalars(const FusionSystem& s) {
  std::vector<std::optional<CycNumber>> out(s.ring.rank());
  const Label one = s.ring.unit();
  for (Label a = 0; a < static_cast<Label>(s.ring.rank()); ++a) {
    const Label ad = s.ring.dual(a);
    if (s.ring.N(a, ad, one) == 0 || !s.block(a, ad, a, a)) continue;
    out[static_cast<size_t>(a)] = s.entry(a, ad, a, a, 1, one, 1, 1, one, 1);
  }
  return out;
}

CheckResult check_duality(const FusionSystem& s) {
  CheckResult res;
  res.name = "duality";
  for (const auto& [q, m] : s.F) {
    ++res.instances;
    if (!is_invertible(m)) res.fail("F" + s.quad_name(q) + " is singular");
  }
  const auto u = duality_scalars(s);
  for (Label a = 0; a < static_cast<Label>(u.size()); ++a) {
    ++res.instances;
    const auto& ua = u[static_cast<size_t>(a)];
    if (!ua) {
      res.fail("u_" + s.ring.name(a) + " undefined (missing block or N_{a a*}^1 = 0)");
      continue;
    }
    res.value("u_" + s.ring.name(a), *ua);
    if (ua->is_zero()) res.fail("u_" + s.ring.name(a) + " = 0");
  }
  return res;
}

CheckResult check_pentagon(const FusionSystem& s) {
  CheckResult res;
  res.name = "pentagon";
  auto blocks_ok = check_blocks(s);
  if (!blocks_ok.ok()) {
    res.fail(blocks_ok.witness);
    return res;
  }
  const FusionRing& r = s.ring;
  const BlockTable F(s);
  const auto L = static_cast<Label>(r.rank());
  auto at = [&](Label a, Label b, Label c, Label u, int i, Label e, int j, int ip, Label ep, int jp) -> const CycNumber& {
    return F(a, b, c, u)(r.row(a, b, c, u, i, e, j), r.col(a, b, c, u, ip, ep, jp));
  };
  const CycNumber zero = CycNumber::zero(s.field);
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c)
        for (Label d = 0; d < L; ++d)
          for (Label u = 0; u < L; ++u)
            for (Label e = 0; e < L; ++e) {
              if (r.N(a, b, e) == 0) continue;
              for (Label f = 0; f < L; ++f) {
                if (r.N(e, c, f) == 0 || r.N(f, d, u) == 0) continue;
                for (Label g = 0; g < L; ++g) {
                  if (r.N(c, d, g) == 0) continue;
                  for (Label h = 0; h < L; ++h) {
                    if (r.N(a, h, u) == 0 || r.N(b, g, h) == 0) continue;
                    for (int i = 1; i <= r.N(a, b, e); ++i)
                      for (int j = 1; j <= r.N(e, c, f); ++j)
                        for (int k = 1; k <= r.N(f, d, u); ++k)
                          for (int n = 1; n <= r.N(a, h, u); ++n)
                            for (int o = 1; o <= r.N(b, g, h); ++o)
                              for (int m = 1; m <= r.N(c, d, g); ++m) {
                                ++res.instances;
                                CycNumber lhs = zero;
                                for (int l = 1; l <= r.N(e, g, u); ++l)
                                  lhs += at(e, c, d, u, j, f, k, l, g, m) * at(a, b, g, u, i, e, l, n, h, o);
                                CycNumber rhs = zero;
                                for (Label q = 0; q < L; ++q)
                                  for (int p = 1; p <= r.N(a, q, f); ++p)
                                    for (int rr = 1; rr <= r.N(b, c, q); ++rr)
                                      for (int v = 1; v <= r.N(q, d, h); ++v) {
                                        const CycNumber& x = at(a, b, c, f, i, e, j, p, q, rr);
                                        if (x.is_zero()) continue;
                                        const CycNumber& y = at(a, q, d, u, p, f, k, n, h, v);
                                        if (y.is_zero()) continue;
                                        rhs += x * y * at(b, c, d, h, rr, q, v, o, g, m);
                                      }
                                if (lhs != rhs) {
                                  std::ostringstream os;
                                  os << "(a,b,c,d,u,e,f,g,h)=" << tuple_name(r, {a, b, c, d, u, e, f, g, h})
                                     << " (i,j,k,n,o,m)=(" << i << "," << j << "," << k << "," << n << "," << o
                                     << "," << m << "): lhs=" << lhs.to_string() << " rhs=" << rhs.to_string();
                                  res.fail(os.str());
                                }
                              }
                  }
                }
              }
            }
  return res;
}

InverseAssociator compute_G(const FusionSystem& s) {
  InverseAssociator out;
  for (const auto& [q, m] : s.F) {
    try {
      out.G.emplace(q, matrix_inverse(m));
    } catch (const SingularMatrix&) {
      throw SingularMatrix("F" + s.quad_name(q) + " is singular");
    }
  }
  const Label one = s.ring.unit();
  for (Label a = 0; a < static_cast<Label>(s.ring.rank()); ++a) {
    const Label ad = s.ring.dual(a);
    auto it = out.G.find(Quad{a, ad, a, a});
    if (it == out.G.end() || s.ring.N(a, ad, one) == 0) {
      out.v.push_back(CycNumber::zero(s.field));
      continue;
    }
    // G rows are a(bc) channels (F's column labels), columns (ab)c channels.
    out.v.push_back(it->second(s.ring.col(a, ad, a, a, 1, one, 1), s.ring.row(a, ad, a, a, 1, one, 1)));
  }
  return out;
}

CheckResult check_inverse_associator(const FusionSystem& s) {
  CheckResult res;
  res.name = "inverse-associator";
  InverseAssociator g;
  try {
    g = compute_G(s);
  } catch (const SingularMatrix& e) {
    res.fail(e.what());
    return res;
  }
  for (const auto& [q, m] : s.F) {
    ++res.instances;
    if (!(g.G.at(q) * m).is_identity()) res.fail("G" + s.quad_name(q) + " F" + s.quad_name(q) + " != I");
  }
  const auto u = duality_scalars(s);
  for (Label a = 0; a < static_cast<Label>(s.ring.rank()); ++a) {
    ++res.instances;
    const Label ad = s.ring.dual(a);
    const auto& va_dual = g.v[static_cast<size_t>(ad)];
    res.value("v_" + s.ring.name(a), g.v[static_cast<size_t>(a)]);
    if (!u[static_cast<size_t>(a)] || va_dual != *u[static_cast<size_t>(a)])
      res.fail("v_{" + s.ring.name(ad) + "} = " + va_dual.to_string() + " differs from u_" + s.ring.name(a));
  }
  return res;
}

Report verify_fusion(const FusionSystem& s) {
  Report rep;
  rep.subject = "fusion";
  auto skip = [&](const std::string& name) {
    CheckResult c;
    c.name = name;
    c.status = Status::skipped;
    rep.add(std::move(c));
  };
  auto ring = validate_ring(s.ring);
  const bool ring_ok = ring.ok();
  rep.add(std::move(ring));
  if (!ring_ok) {
    for (auto name : {"blocks", "triangle", "duality", "pentagon", "inverse-associator"}) skip(name);
    return rep;
  }
  auto blocks = check_blocks(s);
  const bool blocks_ok = blocks.ok();
  rep.add(std::move(blocks));
  if (!blocks_ok) {
    for (auto name : {"triangle", "duality", "pentagon", "inverse-associator"}) skip(name);
    return rep;
  }
  rep.add(check_triangle(s));
  auto dual = check_duality(s);
  const bool dual_ok = dual.ok();
  rep.add(std::move(dual));
  rep.add(check_pentagon(s));
  if (dual_ok)
    rep.add(check_inverse_associator(s));
  else
    skip("inverse-associator");
  return rep;
}

}  // namespace fsys
