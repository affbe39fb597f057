#pragma once

#include <string>
#include <vector>

#include "fsys/hyperring.hpp"

namespace fsys {

/// sigma_k applied to every F (and R, lambda) entry; epsilon unchanged.
/// Throws InvalidAutomorphism unless gcd(k, n) = 1.
FusionSystem twist_system(const FusionSystem& s, long long k);
ModularSystem twist_system(const ModularSystem& m, long long k);

/// The units of Z/n in increasing order (just {1} for n = 1, 2).
std::vector<int> galois_group(int order);

struct OrbitReport {
  int order = 1;
  std::vector<int> automorphisms;
  /// class_of[i] is the class index of the twist by automorphisms[i].
  std::vector<int> class_of;
  /// Automorphism exponent of the first member of each class.
  std::vector<int> representatives;
  /// "gauge invariants" or "exact equality".
  std::string method;
  /// True when some class was formed from twists whose braidings are only
  /// indistinguishable by the implemented invariants.
  bool partial = false;

  size_t class_count() const { return representatives.size(); }
};

OrbitReport galois_orbit(const FusionSystem& s);
OrbitReport galois_orbit(const ModularSystem& m);

/// A Z/modulus grading of the labels.
struct Grading {
  int modulus = 1;
  std::vector<int> degree;
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// deg(1) = 0, degrees in range, and deg(c) = deg(a) + deg(b) whenever N_{ab}^c > 0.
CheckResult validate_grading(const FusionRing& ring, const Grading& g);

/// Multiplies F_{abc}^u by tau^(deg(a) * carry(deg b, deg c)), where
/// carry(p, q) = floor((p + q) / modulus). Requires tau^modulus = 1; the result
/// lives in the lcm of the system's field and tau's field. Throws SchemaError.
FusionSystem tau_twist(const FusionSystem& s, const Grading& g, const CycNumber& tau);

}  // namespace fsys
