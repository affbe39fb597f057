#include "fsys/gauge.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fsys/errors.hpp"

namespace fsys {

namespace {

std::vector<Triple> admissible_triples(const FusionRing& r) {
  std::vector<Triple> out;
  const auto L = static_cast<Label>(r.rank());
  for (Label a = 0; a < L; ++a)
    for (Label b = 0; b < L; ++b)
      for (Label c = 0; c < L; ++c)
        if (r.N(a, b, c) > 0) out.push_back({a, b, c});
  return out;
}

const FieldMatrix& gauge_block(const GaugeElement& g, const FusionRing& r, Label a, Label b, Label u) {
  auto it = g.g.find(Triple{a, b, u});
  if (it == g.g.end()) throw SchemaError("gauge has no block for (" + r.name(a) + "," + r.name(b) + "," + r.name(u) + ")");
  const auto n = static_cast<size_t>(r.N(a, b, u));
  if (it->second.rows() != n || it->second.cols() != n)
    throw SchemaError("gauge block (" + r.name(a) + "," + r.name(b) + "," + r.name(u) + ") has the wrong size");
  return it->second;
}

// Basis change on the (ab)c channels of F_{abc}^u: entry [(i d j)][(i' d j')].
FieldMatrix row_change(const GaugeElement& g, const FusionRing& r, const Quad& q) {
  const auto [a, b, c, u] = q;
  const auto basis = row_basis(r, q);
  FieldMatrix A(g.field, basis.size(), basis.size());
  for (size_t x = 0; x < basis.size(); ++x)
    for (size_t y = 0; y < basis.size(); ++y) {
      if (basis[x].e != basis[y].e) continue;
      const Label d = basis[x].e;
      A(x, y) = gauge_block(g, r, a, b, d)(static_cast<size_t>(basis[x].i - 1), static_cast<size_t>(basis[y].i - 1)) *
                gauge_block(g, r, d, c, u)(static_cast<size_t>(basis[x].j - 1), static_cast<size_t>(basis[y].j - 1));
    }
  return A;
}

// Basis change on the a(bc) channels: entry [(m e n)][(m' e n')].
FieldMatrix col_change(const GaugeElement& g, const FusionRing& r, const Quad& q) {
  const auto [a, b, c, u] = q;
  const auto basis = col_basis(r, q);
  FieldMatrix B(g.field, basis.size(), basis.size());
  for (size_t x = 0; x < basis.size(); ++x)
    for (size_t y = 0; y < basis.size(); ++y) {
      if (basis[x].e != basis[y].e) continue;
      const Label e = basis[x].e;
      B(x, y) = gauge_block(g, r, a, e, u)(static_cast<size_t>(basis[x].i - 1), static_cast<size_t>(basis[y].i - 1)) *
                gauge_block(g, r, b, c, e)(static_cast<size_t>(basis[x].j - 1), static_cast<size_t>(basis[y].j - 1));
    }
  return B;
}

}  // namespace

GaugeElement identity_gauge(const FusionRing& ring, FieldPtr field) {
  GaugeElement out{field, {}};
  for (const auto& t : admissible_triples(ring))
    out.g.emplace(t, FieldMatrix::identity(field, static_cast<size_t>(ring.N(t[0], t[1], t[2]))));
  return out;
}

GaugeElement character_gauge(const FusionRing& ring, const std::vector<CycNumber>& zeta) {
  if (zeta.size() != ring.rank()) throw SchemaError("character needs one value per label");
  GaugeElement out{zeta.front().field(), {}};
  for (const auto& t : admissible_triples(ring)) {
    const CycNumber v = zeta[static_cast<size_t>(t[0])] * zeta[static_cast<size_t>(t[1])] /
                        zeta[static_cast<size_t>(t[2])];
    out.g.emplace(t, FieldMatrix::scalar(v, static_cast<size_t>(ring.N(t[0], t[1], t[2]))));
  }
  return out;
}

GaugeElement random_gauge(const FusionRing& ring, FieldPtr field, std::uint64_t seed, bool normalized) {
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return Rational(static_cast<long>(rng() % 7) - 3); };
  GaugeElement out{field, {}};
  const Label one = ring.unit();
  for (const auto& t : admissible_triples(ring)) {
    const auto [a, b, u] = t;
    const auto n = static_cast<size_t>(ring.N(a, b, u));
    if (normalized && (a == one || b == one)) {
      out.g.emplace(t, FieldMatrix::identity(field, n));
      continue;
    }
    if (normalized && u == one && b < a) {
      out.g.emplace(t, out.g.at(Triple{b, a, u}));
      continue;
    }
    FieldMatrix m(field, n, n);
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = CycNumber(field, draw());
      found = is_invertible(m);
    }
    if (!found) {
      m = FieldMatrix::identity(field, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) m(i, j) = CycNumber(field, draw());
    }
    out.g.emplace(t, std::move(m));
  }
  return out;
}

GaugeElement compose(const GaugeElement& g, const GaugeElement& h) {
  GaugeElement out{g.field, {}};
  for (const auto& [t, m] : g.g) out.g.emplace(t, m * h.g.at(t));
  return out;
}

bool is_normalized(const GaugeElement& g, const FusionRing& ring) {
  const Label one = ring.unit();
  for (Label a = 0; a < static_cast<Label>(ring.rank()); ++a) {
    if (!g.g.at(Triple{one, a, a}).is_identity() || !g.g.at(Triple{a, one, a}).is_identity()) return false;
    if (g.g.at(Triple{a, ring.dual(a), one}) != g.g.at(Triple{ring.dual(a), a, one})) return false;
  }
  return true;
}

FusionSystem apply_gauge(const FusionSystem& s, const GaugeElement& g) {
  if (g.field != s.field) throw FieldMismatch("gauge and system live in different fields");
  FusionSystem out{s.ring, s.field, {}};
  for (const auto& [q, f] : s.F) {
    const FieldMatrix A = row_change(g, s.ring, q);
    const FieldMatrix B = col_change(g, s.ring, q);
    out.F.emplace(q, A.transposed() * f * matrix_inverse(B).transposed());
  }
  return out;
}

ModularSystem apply_gauge(const ModularSystem& m, const GaugeElement& g) {
  ModularSystem out;
  out.base = apply_gauge(m.base, g);
  const FusionRing& r = m.ring();
  for (const auto& [t, rm] : m.R) {
    const auto [a, b, u] = t;
    out.R.emplace(t, gauge_block(g, r, b, a, u).transposed() * rm *
                         matrix_inverse(gauge_block(g, r, a, b, u)).transposed());
  }
  out.epsilon = m.epsilon;
  if (m.sqrt_u && duality_scalars(m.base) == duality_scalars(out.base)) out.sqrt_u = m.sqrt_u;
  return out;
}

bool is_ring_automorphism(const FusionRing& r, const RingAut& phi) {
  const size_t n = r.rank();
  if (phi.perm.size() != n) return false;
  std::vector<Label> sorted = phi.perm;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < n; ++i)
    if (sorted[i] != static_cast<Label>(i)) return false;
  if (phi.perm[static_cast<size_t>(r.unit())] != r.unit()) return false;
  auto p = [&](Label x) { return phi.perm[static_cast<size_t>(x)]; };
  for (Label a = 0; a < static_cast<Label>(n); ++a)
    for (Label b = 0; b < static_cast<Label>(n); ++b)
      for (Label c = 0; c < static_cast<Label>(n); ++c)
        if (r.N(a, b, c) != r.N(p(a), p(b), p(c))) return false;
  return true;
}

std::vector<RingAut> enumerate_automorphisms(const FusionRing& r) {
  std::vector<RingAut> out;
  std::vector<Label> perm(r.rank());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    RingAut phi{perm};
    if (is_ring_automorphism(r, phi)) out.push_back(std::move(phi));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

std::vector<Label> inverse_perm(const RingAut& phi) {
  std::vector<Label> inv(phi.perm.size());
  for (size_t i = 0; i < phi.perm.size(); ++i) inv[static_cast<size_t>(phi.perm[i])] = static_cast<Label>(i);
  return inv;
}

}  // namespace

FusionSystem apply_relabeling(const FusionSystem& s, const RingAut& phi) {
  if (!is_ring_automorphism(s.ring, phi)) throw SchemaError("permutation is not a ring automorphism");
  const auto inv = inverse_perm(phi);
  auto pi = [&](Label x) { return inv[static_cast<size_t>(x)]; };
  FusionSystem out{s.ring, s.field, {}};
  const FusionRing& r = s.ring;
  for (const auto& q : s.admissible_quads()) {
    const auto [a, b, c, u] = q;
    const Quad src{pi(a), pi(b), pi(c), pi(u)};
    const FieldMatrix& f = s.F.at(src);
    const auto rows = row_basis(r, q);
    const auto cols = col_basis(r, q);
    FieldMatrix m(s.field, rows.size(), cols.size());
    for (size_t x = 0; x < rows.size(); ++x)
      for (size_t y = 0; y < cols.size(); ++y)
        m(x, y) = f(r.row(src[0], src[1], src[2], src[3], rows[x].i, pi(rows[x].e), rows[x].j),
                    r.col(src[0], src[1], src[2], src[3], cols[y].i, pi(cols[y].e), cols[y].j));
    out.F.emplace(q, std::move(m));
  }
  return out;
}

ModularSystem apply_relabeling(const ModularSystem& m, const RingAut& phi) {
  ModularSystem out;
  out.base = apply_relabeling(m.base, phi);
  const auto inv = inverse_perm(phi);
  auto pi = [&](Label x) { return inv[static_cast<size_t>(x)]; };
  for (const auto& [t, rm] : m.R) {
    (void)rm;
    out.R.emplace(t, m.R.at(Triple{pi(t[0]), pi(t[1]), pi(t[2])}));
  }
  out.epsilon.resize(m.epsilon.size());
  for (size_t a = 0; a < m.epsilon.size(); ++a) out.epsilon[a] = m.epsilon[static_cast<size_t>(pi(static_cast<Label>(a)))];
  if (m.sqrt_u) {
    std::vector<CycNumber> l;
    for (size_t a = 0; a < m.sqrt_u->size(); ++a) l.push_back((*m.sqrt_u)[static_cast<size_t>(pi(static_cast<Label>(a)))]);
    out.sqrt_u = std::move(l);
  }
  return out;
}

}  // namespace fsys
