#include "fsys/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "fsys/errors.hpp"

namespace fsys {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division over Q; divisor must be nonzero after trimming.
void divmod(QPoly num, const QPoly& den, QPoly& quot, QPoly& rem) {
  trim(num);
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  const Rational& lead = den.back();
  while (num.size() >= den.size() && !num.empty()) {
    const size_t shift = num.size() - den.size();
    Rational factor = num.back() / lead;
    quot[shift] = factor;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    trim(num);
  }
  rem = std::move(num);
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](std::string_view part) {
    size_t pos = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) pos = 1;
    if (pos == part.size()) return false;
    for (; pos < part.size(); ++pos)
      if (part[pos] < '0' || part[pos] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  QPoly num(static_cast<size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto phi_d = cyclotomic_polynomial(d);
    QPoly den(phi_d.begin(), phi_d.end());
    QPoly quot, rem;
    divmod(num, den, quot, rem);
    if (!rem.empty()) throw std::logic_error("cyclotomic division left a remainder");
    num = std::move(quot);
  }
  std::vector<Integer> out;
  out.reserve(num.size());
  for (const auto& c : num) {
    if (c.get_den() != 1) throw std::logic_error("cyclotomic polynomial is not integral");
    out.push_back(c.get_num());
  }
  return out;
}

CycField::CycField(int order)
    : order_(order), degree_(euler_phi(order)), min_poly_(cyclotomic_polynomial(order)) {
  const auto deg = static_cast<size_t>(degree_);
  powers_.reserve(static_cast<size_t>(order_));
  std::vector<Integer> current(deg, Integer(0));
  current[0] = 1;
  for (int k = 0; k < order_; ++k) {
    powers_.push_back(current);
    // multiply by z and reduce with the monic relation
    Integer top = current[deg - 1];
    for (size_t i = deg - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (size_t i = 0; i < deg; ++i) current[i] -= top * min_poly_[i];
  }
}

std::shared_ptr<const CycField> CycField::get(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CycField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const CycField>(order);
  cache.emplace(order, field);
  return field;
}

CycNumber::CycNumber(FieldPtr field) : field_(std::move(field)) {
  coeffs_.assign(static_cast<size_t>(field_->degree()), Rational(0));
}

CycNumber::CycNumber(FieldPtr field, const Rational& value) : CycNumber(std::move(field)) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycNumber::CycNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  const auto deg = static_cast<size_t>(field_->degree());
  if (coeffs_.size() > deg) {
    // Reduce a longer coefficient vector (interpreted as a polynomial in z).
    std::vector<Rational> reduced(deg, Rational(0));
    const auto n = static_cast<size_t>(field_->order());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      const auto& p = field_->power(static_cast<int>(i % n));
      for (size_t j = 0; j < deg; ++j)
        if (p[j] != 0) reduced[j] += coeffs_[i] * p[j];
    }
    coeffs_ = std::move(reduced);
  } else {
    coeffs_.resize(deg, Rational(0));
  }
}

CycNumber CycNumber::root_of_unity(FieldPtr field, long long k) {
  const long long n = field->order();
  long long r = ((k % n) + n) % n;
  std::vector<Rational> c;
  const auto& p = field->power(static_cast<int>(r));
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return CycNumber(std::move(field), std::move(c));
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_one() const { return coeffs_.front() == 1 && is_rational(); }

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycNumber::require_same_field(const CycNumber& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("operands live in Q(zeta_" + std::to_string(field_ ? field_->order() : 0) +
                        ") and Q(zeta_" + std::to_string(other.field_ ? other.field_->order() : 0) +
                        ")");
  }
}

CycNumber CycNumber::operator-() const {
  CycNumber out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  require_same_field(other);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) {
  require_same_field(other);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
  *this = *this * other;
  return *this;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.require_same_field(b);
  const auto& field = a.field_;
  const size_t deg = a.coeffs_.size();
  if (a.is_rational()) {
    CycNumber out(b);
    for (auto& c : out.coeffs_) c *= a.coeffs_[0];
    return out;
  }
  if (b.is_rational()) {
    CycNumber out(a);
    for (auto& c : out.coeffs_) c *= b.coeffs_[0];
    return out;
  }
  std::vector<Rational> product(2 * deg - 1, Rational(0));
  for (size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < deg; ++j) {
      if (b.coeffs_[j] == 0) continue;
      product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycNumber(field, std::move(product));
}

CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

bool operator==(const CycNumber& a, const CycNumber& b) {
  a.require_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(field_->order()) + ")");
  if (is_rational()) return CycNumber(field_, Rational(1) / coeffs_[0]);
  // Extended Euclid: track s with s * a == r (mod Phi_n).
  QPoly r0(field_->min_poly().begin(), field_->min_poly().end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;           // coefficient of a for r0
  QPoly s1{Rational(1)};  // coefficient of a for r1
  while (r1.size() > 1) {
    QPoly q, rem;
    divmod(r0, r1, q, rem);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_n is irreducible.
  Rational c = r1.at(0);
  for (auto& v : s1) v /= c;
  return CycNumber(field_, std::move(s1));
}

CycNumber CycNumber::pow(long long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNumber result = one(field_);
  CycNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> CycNumber::to_wire() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(format_rational(c));
  return out;
}

CycNumber CycNumber::from_wire(FieldPtr field, const std::vector<std::string>& wire) {
  if (static_cast<int>(wire.size()) != field->degree()) {
    throw ParseError("cyclotomic number needs " + std::to_string(field->degree()) +
                     " coefficients over Q(zeta_" + std::to_string(field->order()) + "), got " +
                     std::to_string(wire.size()));
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(wire.size());
  for (const auto& w : wire) coeffs.push_back(parse_rational(w));
  return CycNumber(std::move(field), std::move(coeffs));
}

CycNumber galois_apply(long long k, const CycNumber& a) {
  const auto& field = a.field();
  const long long n = field->order();
  if (gcd_ll(k, n) != 1) {
    throw InvalidAutomorphism("Galois exponent " + std::to_string(k) + " is not coprime to " +
                              std::to_string(n));
  }
  const long long kr = ((k % n) + n) % n;
  const size_t deg = a.coeffs().size();
  std::vector<Rational> out(deg, Rational(0));
  for (size_t i = 0; i < deg; ++i) {
    const Rational& c = a.coeffs()[i];
    if (c == 0) continue;
    const auto& p = field->power(static_cast<int>((static_cast<long long>(i) * kr) % n));
    for (size_t j = 0; j < deg; ++j)
      if (p[j] != 0) out[j] += c * p[j];
  }
  return CycNumber(field, std::move(out));
}

CycNumber lift_field(const CycNumber& a, int target_order) {
  const int m = a.field()->order();
  if (target_order < 1 || target_order % m != 0) {
    throw InvalidAutomorphism("cannot lift Q(zeta_" + std::to_string(m) + ") into Q(zeta_" +
                              std::to_string(target_order) + ")");
  }
  if (target_order == m) return a;
  auto target = CycField::get(target_order);
  const int step = target_order / m;
  std::vector<Rational> out(static_cast<size_t>(target->degree()), Rational(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rational& c = a.coeffs()[i];
    if (c == 0) continue;
    const auto& p = target->power(static_cast<int>((i * static_cast<size_t>(step)) %
                                                   static_cast<size_t>(target_order)));
    for (size_t j = 0; j < out.size(); ++j)
      if (p[j] != 0) out[j] += c * p[j];
  }
  return CycNumber(target, std::move(out));
}

std::complex<double> embed_complex(const CycNumber& a) {
  const double n = a.field()->order();
  std::complex<double> sum(0.0, 0.0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const double c = a.coeffs()[i].get_d();
    if (c == 0.0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
    sum += c * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

}  // namespace fsys
