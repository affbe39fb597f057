#pragma once

#include <stdexcept>
#include <string>

namespace fsys {

/// Operands live in different cyclotomic fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Galois exponent k with gcd(k, n) != 1, or a lift to a non-multiple order.
class InvalidAutomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structural problems with system data: wrong block sizes, unknown labels,
/// rings that do not meet an operation's precondition.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsys
