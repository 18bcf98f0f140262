#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liekms/rational.hpp"

namespace liekms {

/// Dense matrix over exact rationals. Row-major.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    Rational s;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
    return s;
  }

  std::vector<Rational> row(std::size_t i) const {
    return std::vector<Rational>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  void append_row(const std::vector<Rational>& r) {
    if (r.size() != cols_ && rows_ != 0) throw std::invalid_argument("RatMatrix: row length mismatch");
    if (rows_ == 0) cols_ = r.size();
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix: dimension mismatch in sum");
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }

  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix: dimension mismatch in difference");
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

  friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RatMatrix: vector length mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational s;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// In-place reduced row echelon form (Gauss-Jordan over Q).
/// Returns the pivot column of each pivot row, in order.
inline std::vector<std::size_t> rref_in_place(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// RREF with zero rows dropped; rows are a canonical basis of the row space.
inline RatMatrix row_space_basis(RatMatrix m, std::vector<std::size_t>* pivots_out = nullptr) {
  std::vector<std::size_t> pivots = rref_in_place(m);
  RatMatrix out(0, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.append_row(m.row(i));
  if (pivots_out) *pivots_out = pivots;
  return out;
}

inline std::size_t rank(RatMatrix m) { return rref_in_place(m).size(); }

/// Basis of the (right) kernel of m, one vector per row of the result.
inline RatMatrix kernel_basis(RatMatrix m) {
  std::vector<std::size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  RatMatrix out(0, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(m.cols());
    v[c] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, c);
    out.append_row(v);
  }
  return out;
}

/// Exact coordinate solver for a fixed full-column-rank matrix B:
/// given v, finds c with B c = v, or reports that v is outside the column
/// space. Factors once, solves many.
class LinearSolver {
public:
  explicit LinearSolver(const RatMatrix& b) : b_(b) {
    RatMatrix aug(b.rows(), b.cols() + b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) aug(i, j) = b(i, j);
      aug(i, b.cols() + i) = Rational(1);
    }
    pivots_ = rref_in_place(aug);
    std::size_t pivot_count = 0;
    for (std::size_t c : pivots_)
      if (c < b.cols()) ++pivot_count;
    if (pivot_count != b.cols()) throw std::invalid_argument("LinearSolver: matrix does not have full column rank");
    transform_ = RatMatrix(b.rows(), b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.rows(); ++j) transform_(i, j) = aug(i, b.cols() + j);
  }

  /// Solves B c = v; throws if v is not in the column space of B.
  std::vector<Rational> coordinates(const std::vector<Rational>& v) const {
    std::vector<Rational> u = transform_.apply(v);
    std::vector<Rational> c(b_.cols());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
      if (pivots_[i] < b_.cols()) c[pivots_[i]] = u[i];
    std::vector<Rational> check = b_.apply(c);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (check[i] != v[i]) throw std::invalid_argument("LinearSolver: vector outside column space");
    return c;
  }

private:
  RatMatrix b_;
  RatMatrix transform_;
  std::vector<std::size_t> pivots_;
};

}  // namespace liekms
