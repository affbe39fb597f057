#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsys/fusion_system.hpp"

namespace fsys {

/// A fusion system with braiding R, pivotal signs epsilon and optional square
/// roots lambda_a of u_a.
///
/// R_{ab}^c[i;i'] has its row index in N_{ba}^c and its column index in
/// N_{ab}^c. The inverse braiding is Q_{ab}^c = (R_{ba}^c)^{-1}, which carries
/// the same index roles.
struct ModularSystem {
  FusionSystem base;
  std::map<Triple, FieldMatrix> R;
  std::vector<int> epsilon;
  std::optional<std::vector<CycNumber>> sqrt_u;

  const FieldPtr& field() const { return base.field; }
  const FusionRing& ring() const { return base.ring; }

  friend bool operator==(const ModularSystem& x, const ModularSystem& y) {
    return x.base == y.base && x.R == y.R && x.epsilon == y.epsilon && x.sqrt_u == y.sqrt_u;
  }
};

ModularSystem lift_system(const ModularSystem& m, int order);

/// Q_{ab}^c = (R_{ba}^c)^{-1} for every admissible triple. Throws SingularMatrix.
std::map<Triple, FieldMatrix> compute_Q(const ModularSystem& m);

CheckResult check_commutativity(const FusionRing& ring);
/// Every admissible R present, square of size N_{ab}^c, invertible; epsilon is a
/// +-1 vector over L.
CheckResult check_braiding_data(const ModularSystem& m);

CheckResult check_hexagon_R(const ModularSystem& m);
CheckResult check_hexagon_Q(const ModularSystem& m);
CheckResult audit_unit_braiding(const ModularSystem& m);
CheckResult check_pivotal(const ModularSystem& m);

FieldMatrix compute_S_hat(const ModularSystem& m);
/// Exact symmetry audit; asymmetry is a warning, never a failure.
CheckResult audit_S_hat_symmetry(const FieldMatrix& s_hat, const FusionRing& ring);
CheckResult check_modularity(const FieldMatrix& s_hat);

struct QuantumDimensions {
  /// False when no lambda was supplied: only S-hat is available.
  bool available = false;
  std::vector<CycNumber> q;
  FieldMatrix S;
  CheckResult validation;
};

/// q_a = eps_a / (lambda_a lambda_{a*}) and S = D S-hat D. The validation
/// check fails when some lambda_a^2 != u_a.
QuantumDimensions quantum_dimensions(const ModularSystem& m, const FieldMatrix& s_hat);

struct RationalDatum {
  std::string key;
  Rational value;
  friend bool operator==(const RationalDatum&, const RationalDatum&) = default;
};

struct IntrinsicData {
  FusionRing ring;
  std::vector<CycNumber> u;
  std::optional<FieldMatrix> S_hat;
  std::optional<FieldMatrix> S;
  /// Characteristic polynomial of every R_{ab}^c, little-endian.
  std::vector<std::pair<Triple, std::vector<CycNumber>>> r_charpolys;
  /// Entries of S-hat, u_a and the R characteristic polynomials that lie in Q.
  std::vector<RationalDatum> rational;
};

IntrinsicData intrinsic_data(const FusionSystem& s);
IntrinsicData intrinsic_data(const ModularSystem& m);

/// verify_fusion followed by the braiding, hexagon, pivotal and modularity checks.
Report verify_modular(const ModularSystem& m);

}  // namespace fsys
