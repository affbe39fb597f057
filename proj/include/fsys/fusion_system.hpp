#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsys/fusion_ring.hpp"
#include "fsys/matrix.hpp"
#include "fsys/report.hpp"

namespace fsys {

/// A fusion ring together with F-matrices over Q(zeta_n).
///
/// F_{abc}^u is stored only for admissible quadruples (N_{abc}^u > 0); rows are
/// indexed by (ab)c channels and columns by a(bc) channels, see FusionRing.
struct FusionSystem {
  FusionRing ring;
  FieldPtr field;
  std::map<Quad, FieldMatrix> F;

  /// Nullptr when the block is absent.
  const FieldMatrix* block(Label a, Label b, Label c, Label u) const;
  /// F_{abc}^u[(i e j);(i' e' j')], all multiplicity indices 1-based.
  const CycNumber& entry(Label a, Label b, Label c, Label u, int i, Label e, int j, int ip, Label ep,
                         int jp) const;

  /// Every admissible quadruple in lexicographic order.
  std::vector<Quad> admissible_quads() const;

  /// Every admissible block set to the identity.
  static FusionSystem trivial(FusionRing ring, FieldPtr field);

  std::string quad_name(const Quad& q) const;

  friend bool operator==(const FusionSystem& x, const FusionSystem& y) {
    return x.ring == y.ring && x.field == y.field && x.F == y.F;
  }
};

/// Entry-wise image of every F block in Q(zeta_order).
FusionSystem lift_system(const FusionSystem& s, int order);

/// Checks that all admissible blocks exist with the right shape. The returned
/// check fails with a witness naming the first offending quadruple.
CheckResult check_blocks(const FusionSystem& s);

/// F_{a1b}^u = I; the two derived identities F_{1ab}^u = I and F_{ab1}^u = I are
/// reported as warnings.
CheckResult check_triangle(const FusionSystem& s);

/// u_a for every label; nullopt where the block is missing.
std::vector<std::optional<CycNumber>> duality_scalars(const FusionSystem& s);

/// Every F invertible and every u_a nonzero. u_a values are listed in `values`.
CheckResult check_duality(const FusionSystem& s);

CheckResult check_pentagon(const FusionSystem& s);

struct InverseAssociator {
  /// G_{abc}^u = (F_{abc}^u)^{-1}: rows indexed by a(bc) channels, columns by (ab)c.
  std::map<Quad, FieldMatrix> G;
  /// v_a = G_{a a* a}^a[(1 1 1);(1 1 1)].
  std::vector<CycNumber> v;
};

/// Throws SingularMatrix naming the quadruple if some F is singular.
InverseAssociator compute_G(const FusionSystem& s);

/// G against F gives identities, and v_{a*} = u_a for every a.
CheckResult check_inverse_associator(const FusionSystem& s);

/// validate_ring, blocks, triangle, duality, pentagon and inverse-associator checks.
Report verify_fusion(const FusionSystem& s);

}  // namespace fsys
