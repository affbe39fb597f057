#pragma once

#include <cstddef>
#include <vector>

#include "fsys/cyclotomic.hpp"

namespace fsys {

/// Dense row-major matrix over a single cyclotomic field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr field, size_t rows, size_t cols);

  static FieldMatrix identity(FieldPtr field, size_t n);
  static FieldMatrix scalar(const CycNumber& value, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  bool square() const { return rows_ == cols_; }

  const CycNumber& operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
  CycNumber& operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<CycNumber>& entries() const { return entries_; }

  bool is_identity() const;
  bool is_zero() const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

  FieldMatrix scaled(const CycNumber& factor) const;
  FieldMatrix transposed() const;
  /// Entry-wise map, e.g. a Galois automorphism or a field lift.
  template <typename Fn>
  FieldMatrix map(Fn&& fn) const {
    FieldMatrix out;
    out.rows_ = rows_;
    out.cols_ = cols_;
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_) out.entries_.push_back(fn(e));
    out.field_ = out.entries_.empty() ? field_ : out.entries_.front().field();
    return out;
  }

 private:
  FieldPtr field_;
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<CycNumber> entries_;
};

/// Exact inverse by Gauss-Jordan elimination, pivoting on the first nonzero
/// entry scanning down each column. Throws SingularMatrix.
FieldMatrix matrix_inverse(const FieldMatrix& m);

bool is_invertible(const FieldMatrix& m);

CycNumber determinant(const FieldMatrix& m);

/// Characteristic polynomial det(x I - m), little-endian, monic.
std::vector<CycNumber> characteristic_polynomial(const FieldMatrix& m);

size_t rank(const FieldMatrix& m);

}  // namespace fsys
