#pragma once

#include "pfc/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace pfc {

/// Finite sum of c_e N^e with rational c_e, N symbolic.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(int c) : LaurentScalar(Rational(c)) {}
  LaurentScalar(const Rational& c);
  static LaurentScalar monomial(const Rational& c, int exponent);
  /// N^e.
  static LaurentScalar power(int exponent) { return monomial(1, exponent); }
  /// N (N-1) ... (N-m+1).
  static LaurentScalar falling_factorial(int m);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  /// Largest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<int> max_exponent() const;
  std::optional<int> min_exponent() const;
  /// Value as N -> infinity when the max exponent is <= 0.
  std::optional<Rational> limit() const;
  bool is_constant() const;
  Rational evaluate(const Rational& n) const;
  /// Multiplies by N^e.
  LaurentScalar shifted(int exponent) const;

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(LaurentScalar a, const LaurentScalar& b) { return a *= b; }
  friend LaurentScalar operator-(const LaurentScalar& a) { return LaurentScalar() - a; }
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, Rational> terms_;
};

/// Ascending exponents, e.g. "3*N^-1 + 1"; "0" for zero.
std::string to_string(const LaurentScalar& x);

}  // namespace pfc
