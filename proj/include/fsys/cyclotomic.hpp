#pragma once

// Exact arithmetic in Q and in cyclotomic fields Q(zeta_n).
//
// Elements of Q(zeta_n) are stored in the power basis 1, z, ..., z^(phi(n)-1)
// reduced modulo the n-th cyclotomic polynomial, so two elements are equal
// exactly when their coefficient vectors are equal.

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fsys {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits) into canonical form.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Coefficients of Phi_n, little-endian, monic.
std::vector<Integer> cyclotomic_polynomial(int n);

int euler_phi(int n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// The field Q(zeta_n). Instances are interned: CycField::get(n) always returns
/// the same object for the same n, so fields compare by pointer.
class CycField {
 public:
  static std::shared_ptr<const CycField> get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  const std::vector<Integer>& min_poly() const { return min_poly_; }

  /// Reduced coefficient vector of zeta^k for 0 <= k < n.
  const std::vector<Integer>& power(int k) const { return powers_[static_cast<size_t>(k)]; }

  explicit CycField(int order);

 private:
  int order_;
  int degree_;
  std::vector<Integer> min_poly_;
  std::vector<std::vector<Integer>> powers_;
};

using FieldPtr = std::shared_ptr<const CycField>;

class CycNumber {
 public:
  CycNumber() = default;
  explicit CycNumber(FieldPtr field);
  CycNumber(FieldPtr field, const Rational& value);
  CycNumber(FieldPtr field, std::vector<Rational> coeffs);

  static CycNumber zero(FieldPtr field) { return CycNumber(std::move(field)); }
  static CycNumber one(FieldPtr field) { return CycNumber(std::move(field), Rational(1)); }
  /// zeta_n^k for any integer k.
  static CycNumber root_of_unity(FieldPtr field, long long k);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  const Rational& constant_term() const { return coeffs_.front(); }

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber& operator*=(const CycNumber& other);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b);
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
  CycNumber inverse() const;
  CycNumber pow(long long exponent) const;

  /// Human-readable polynomial in z, e.g. "1/2 - z + 3*z^2".
  std::string to_string() const;
  /// Wire form: one canonical "p/q" or "p" string per coefficient.
  std::vector<std::string> to_wire() const;
  static CycNumber from_wire(FieldPtr field, const std::vector<std::string>& wire);

 private:
  void require_same_field(const CycNumber& other) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// sigma_k : zeta -> zeta^k. Throws InvalidAutomorphism unless gcd(k, n) = 1.
CycNumber galois_apply(long long k, const CycNumber& a);

/// Image of a under Q(zeta_m) -> Q(zeta_n), zeta_m -> zeta_n^(n/m).
CycNumber lift_field(const CycNumber& a, int target_order);

/// Floating-point value at zeta = exp(2 pi i / n). Report-only.
std::complex<double> embed_complex(const CycNumber& a);

}  // namespace fsys
