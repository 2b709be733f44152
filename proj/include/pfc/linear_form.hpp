#pragma once

#include "pfc/kreweras.hpp"
#include "pfc/partition.hpp"
#include "pfc/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pfc {

/// Polynomial in t with rational coefficients.
class TPoly {
 public:
  TPoly() = default;
  TPoly(int c) : TPoly(Rational(c)) {}
  TPoly(const Rational& c);
  static TPoly monomial(const Rational& c, std::size_t power);

  /// Coefficient of t^j (zero past the degree).
  Rational coeff(std::size_t j) const;
  /// Number of stored coefficients; 0 for the zero polynomial.
  std::size_t length() const { return c_.size(); }
  TPoly truncated(std::size_t order) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::string to_string(const TPoly& p);

/// Values on every partition of P_k for k <= degree_bound, indexed like PkCatalog::basis.
template <class V>
class Form {
 public:
  Form() : Form(0) {}
  explicit Form(std::size_t degree_bound) : bound_(degree_bound), levels_(degree_bound + 1) {
    for (std::size_t k = 0; k <= bound_; ++k) levels_[k].assign(PkCatalog::get(k).size(), V(0));
  }

  static Form delta(std::size_t degree_bound, const Partition& p) {
    Form f(degree_bound);
    f[p] = V(1);
    return f;
  }

  std::size_t degree_bound() const { return bound_; }
  std::vector<V>& level(std::size_t k) { return levels_.at(k); }
  const std::vector<V>& level(std::size_t k) const { return levels_.at(k); }

  V& operator[](const Partition& p) { return levels_.at(degree(p))[PkCatalog::get(degree(p)).index_of(p)]; }
  const V& operator()(const Partition& p) const {
    return levels_.at(degree(p))[PkCatalog::get(degree(p)).index_of(p)];
  }

  Form& operator+=(const Form& o) {
    check(o);
    for (std::size_t k = 0; k <= bound_; ++k)
      for (std::size_t i = 0; i < levels_[k].size(); ++i) levels_[k][i] += o.levels_[k][i];
    return *this;
  }
  Form& operator-=(const Form& o) {
    check(o);
    for (std::size_t k = 0; k <= bound_; ++k)
      for (std::size_t i = 0; i < levels_[k].size(); ++i) levels_[k][i] -= o.levels_[k][i];
    return *this;
  }
  Form& operator*=(const V& s) {
    for (auto& lv : levels_)
      for (auto& v : lv) v = v * s;
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend bool operator==(const Form& a, const Form& b) = default;

  void check(const Form& o) const {
    if (o.bound_ != bound_) throw OperandMismatch("linear forms have different degree bounds");
  }

 private:
  std::size_t bound_;
  std::vector<std::vector<V>> levels_;
};

using LinearForm = Form<Rational>;
using SeriesForm = Form<TPoly>;

}  // namespace pfc
