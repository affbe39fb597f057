#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fsys/modular_system.hpp"

namespace fsys {

/// One invertible matrix g_{ab}^u of size N_{ab}^u per admissible triple.
///
/// The action sends F_{abc}^u to A^T F B^{-T} where A = g_{ab}^d (x) g_{dc}^u on
/// the rows and B = g_{ae}^u (x) g_{bc}^e on the columns, and R_{ab}^u to
/// g_{ba}^u^T R g_{ab}^u^{-T}. Acting by g and then by h equals acting by the
/// entry-wise product g h (see compose).
struct GaugeElement {
  FieldPtr field;
  std::map<Triple, FieldMatrix> g;

  friend bool operator==(const GaugeElement&, const GaugeElement&) = default;
};

GaugeElement identity_gauge(const FusionRing& ring, FieldPtr field);

/// g_{ab}^u = zeta(a) zeta(b) / zeta(u) times the identity. Fixes every F and R.
GaugeElement character_gauge(const FusionRing& ring, const std::vector<CycNumber>& zeta);

/// Deterministic small-integer gauge (entries in {-3..3}). With `normalized`,
/// g_{1a}^a = g_{a1}^a = 1 and g_{a*a}^1 = g_{aa*}^1, which keeps the triangle
/// identity and every u_a unchanged.
GaugeElement random_gauge(const FusionRing& ring, FieldPtr field, std::uint64_t seed, bool normalized = true);

/// Entry-wise matrix product g_{ab}^u h_{ab}^u.
GaugeElement compose(const GaugeElement& g, const GaugeElement& h);

bool is_normalized(const GaugeElement& g, const FusionRing& ring);

/// Throws SingularMatrix if some g_{ab}^u is not invertible, SchemaError if a
/// block is missing or of the wrong size.
FusionSystem apply_gauge(const FusionSystem& s, const GaugeElement& g);
/// Also transforms R. sqrt_u is kept when every u_a is unchanged and dropped
/// otherwise.
ModularSystem apply_gauge(const ModularSystem& m, const GaugeElement& g);

/// A label permutation fixing the unit and preserving N.
struct RingAut {
  std::vector<Label> perm;
  friend bool operator==(const RingAut&, const RingAut&) = default;
};

bool is_ring_automorphism(const FusionRing& ring, const RingAut& phi);
/// All automorphisms, identity first, others in lexicographic order of perm.
std::vector<RingAut> enumerate_automorphisms(const FusionRing& ring);

/// F^phi_{abc}^u = F_{phi^-1(a) phi^-1(b) phi^-1(c)}^{phi^-1(u)}; likewise R,
/// epsilon and sqrt_u. Throws SchemaError when phi is not an automorphism.
FusionSystem apply_relabeling(const FusionSystem& s, const RingAut& phi);
ModularSystem apply_relabeling(const ModularSystem& m, const RingAut& phi);

}  // namespace fsys
