#include "pfc/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace pfc {

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    if (p != 1)
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(col, j) != 0) a(r, j) -= f * a(col, j);
        if (inv(col, j) != 0) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(RationalMatrix a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace pfc
