#pragma once

#include "pfc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pfc {

/// Dense square-or-rectangular matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != T(0)) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;

/// Kronecker product.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Exact Gauss-Jordan inverse; nullopt if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

std::size_t rank(RationalMatrix m);

RationalMatrix to_rational(const IntMatrix& m);

}  // namespace pfc
