#include "fsys/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "fsys/errors.hpp"

namespace fsys {

FieldMatrix::FieldMatrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  entries_.assign(rows * cols, CycNumber::zero(field_));
}

FieldMatrix FieldMatrix::identity(FieldPtr field, size_t n) {
  FieldMatrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = CycNumber::one(field);
  return m;
}

FieldMatrix FieldMatrix::scalar(const CycNumber& value, size_t n) {
  FieldMatrix m(value.field(), n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

bool FieldMatrix::is_identity() const {
  if (!square()) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      const auto& e = (*this)(r, c);
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

bool FieldMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  FieldMatrix out(a.field_, a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  FieldMatrix out(a);
  for (size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  FieldMatrix out(a);
  for (size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

FieldMatrix FieldMatrix::scaled(const CycNumber& factor) const {
  FieldMatrix out(*this);
  for (auto& e : out.entries_) e = e * factor;
  return out;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix out(field_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

namespace {

// Reduces `work` to row echelon form in place, applying the same row operations
// to `aug` when given. Returns the pivot columns.
std::vector<size_t> eliminate(FieldMatrix& work, FieldMatrix* aug, bool full) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < work.cols() && row < work.rows(); ++col) {
    size_t pivot = row;
    while (pivot < work.rows() && work(pivot, col).is_zero()) ++pivot;
    if (pivot == work.rows()) continue;
    if (pivot != row) {
      for (size_t c = 0; c < work.cols(); ++c) std::swap(work(pivot, c), work(row, c));
      if (aug)
        for (size_t c = 0; c < aug->cols(); ++c) std::swap((*aug)(pivot, c), (*aug)(row, c));
    }
    const CycNumber inv = work(row, col).inverse();
    for (size_t c = 0; c < work.cols(); ++c) work(row, c) = work(row, c) * inv;
    if (aug)
      for (size_t c = 0; c < aug->cols(); ++c) (*aug)(row, c) = (*aug)(row, c) * inv;
    for (size_t r = full ? 0 : row + 1; r < work.rows(); ++r) {
      if (r == row || work(r, col).is_zero()) continue;
      const CycNumber factor = work(r, col);
      for (size_t c = 0; c < work.cols(); ++c)
        if (!work(row, c).is_zero()) work(r, c) -= factor * work(row, c);
      if (aug)
        for (size_t c = 0; c < aug->cols(); ++c)
          if (!(*aug)(row, c).is_zero()) (*aug)(r, c) -= factor * (*aug)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

FieldMatrix matrix_inverse(const FieldMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  FieldMatrix work(m);
  FieldMatrix inv = FieldMatrix::identity(m.field(), m.rows());
  auto pivots = eliminate(work, &inv, true);
  if (pivots.size() != m.rows()) throw SingularMatrix("matrix is singular");
  return inv;
}

bool is_invertible(const FieldMatrix& m) {
  if (!m.square()) return false;
  FieldMatrix work(m);
  return eliminate(work, nullptr, false).size() == m.rows();
}

size_t rank(const FieldMatrix& m) {
  FieldMatrix work(m);
  return eliminate(work, nullptr, false).size();
}

CycNumber determinant(const FieldMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  FieldMatrix work(m);
  const size_t n = m.rows();
  CycNumber det = CycNumber::one(m.field());
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return CycNumber::zero(m.field());
    if (pivot != col) {
      for (size_t c = 0; c < n; ++c) std::swap(work(pivot, c), work(col, c));
      det = -det;
    }
    det *= work(col, col);
    const CycNumber inv = work(col, col).inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (work(r, col).is_zero()) continue;
      const CycNumber factor = work(r, col) * inv;
      for (size_t c = col; c < n; ++c) work(r, c) -= factor * work(col, c);
    }
  }
  return det;
}

std::vector<CycNumber> characteristic_polynomial(const FieldMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const size_t n = m.rows();
  const auto& field = m.field();
  std::vector<CycNumber> coeffs(n + 1, CycNumber::zero(field));
  coeffs[n] = CycNumber::one(field);
  FieldMatrix mk(field, n, n);
  for (size_t k = 1; k <= n; ++k) {
    mk = m * mk + FieldMatrix::scalar(coeffs[n - k + 1], n);
    FieldMatrix am = m * mk;
    CycNumber trace = CycNumber::zero(field);
    for (size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -(trace * CycNumber(field, Rational(1, static_cast<unsigned long>(k))));
  }
  return coeffs;
}

}  // namespace fsys
