#include "pfc/laurent.hpp"

namespace pfc {

LaurentScalar::LaurentScalar(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentScalar LaurentScalar::monomial(const Rational& c, int exponent) {
  LaurentScalar x;
  if (c != 0) x.terms_.emplace(exponent, c);
  return x;
}

LaurentScalar LaurentScalar::falling_factorial(int m) {
  LaurentScalar x(1);
  for (int j = 0; j < m; ++j) x *= power(1) - LaurentScalar(j);
  return x;
}

Rational LaurentScalar::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentScalar::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> LaurentScalar::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Rational> LaurentScalar::limit() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.rbegin()->first > 0) return std::nullopt;
  return coeff(0);
}

bool LaurentScalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational LaurentScalar::evaluate(const Rational& n) const {
  Rational v = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    for (int j = 0; j < (e < 0 ? -e : e); ++j) p *= n;
    v += e < 0 ? c / p : c * p;
  }
  return v;
}

LaurentScalar LaurentScalar::shifted(int exponent) const {
  LaurentScalar x;
  for (const auto& [e, c] : terms_) x.terms_.emplace(e + exponent, c);
  return x;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
  LaurentScalar r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r += monomial(c1 * c2, e1 + e2);
  *this = std::move(r);
  return *this;
}

std::string to_string(const LaurentScalar& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : x.terms()) {
    Rational mag = c;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) mag = -c;
    }
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "N";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace pfc
