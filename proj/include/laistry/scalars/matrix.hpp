#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/scalars/field.hpp"

namespace laistry {

// Dense matrix over FieldElem, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const FieldElem& fill = FieldElem(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const FieldElem& one = FieldElem(1)) {
    Matrix m(n, n, one.zero_like());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<FieldElem>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw InvalidSpec("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidSpec("matrix shapes do not match for multiplication");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const FieldElem& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }

  Matrix scaled(const FieldElem& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  Matrix pow(unsigned e) const {
    if (!is_square()) throw InvalidSpec("power of a non-square matrix");
    Matrix r = identity(rows_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  // Kronecker product: (A ⊗ B)(i*p + k, j*q + l) = A(i,j) B(k,l).
  static Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l) r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
      }
    return r;
  }

  FieldElem trace() const {
    FieldElem t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  FieldElem determinant() const {
    if (!is_square()) throw InvalidSpec("determinant of a non-square matrix");
    Matrix m = *this;
    FieldElem det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) return det.zero_like();
      if (p != c) {
        m.swap_rows(p, c);
        det = -det;
      }
      det *= m(c, c);
      const FieldElem inv = m(c, c).inverse();
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (m(r, c).is_zero()) continue;
        const FieldElem f = m(r, c) * inv;
        for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(c, k);
      }
    }
    return det;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
      std::size_t p = row;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      swap_rows(p, row);
      const FieldElem inv = (*this)(row, c).inverse();
      for (std::size_t k = c; k < cols_; ++k) (*this)(row, k) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, c).is_zero()) continue;
        const FieldElem f = (*this)(r, c);
        for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) -= f * (*this)(row, k);
      }
      pivots.push_back(c);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.row_reduce().size();
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_string();
    return out;
  }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidSpec("matrix shapes differ");
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(a, k), (*this)(b, k));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

}  // namespace laistry
