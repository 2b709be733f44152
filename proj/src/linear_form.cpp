#include "pfc/linear_form.hpp"

#include <algorithm>

namespace pfc {

TPoly::TPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

TPoly TPoly::monomial(const Rational& c, std::size_t power) {
  TPoly p;
  if (c == 0) return p;
  p.c_.assign(power + 1, Rational(0));
  p.c_[power] = c;
  return p;
}

Rational TPoly::coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Rational(0); }

TPoly TPoly::truncated(std::size_t order) const {
  TPoly p = *this;
  if (p.c_.size() > order + 1) p.c_.resize(order + 1);
  p.trim();
  return p;
}

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

std::string to_string(const TPoly& p) {
  std::string out;
  for (std::size_t j = 0; j < p.length(); ++j) {
    const auto c = p.coeff(j);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (j == 1) out += "*t";
    if (j > 1) out += "*t^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace pfc
