#pragma once

#include "pfc/laurent.hpp"
#include "pfc/linear_form.hpp"
#include "pfc/partition.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pfc {

/// Element of the partition algebra of P_k with coefficients Laurent in N.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t k) : k_(k) {}
  static AlgebraElement basis(const Partition& p, const LaurentScalar& c = LaurentScalar(1));
  /// N^-(nc(p) - nc(p v id_k)) p, whose only cumulant is 1 at p.
  static AlgebraElement normalized(const Partition& p, const LaurentScalar& c = LaurentScalar(1));

  std::size_t k() const { return k_; }
  const std::map<Partition, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar coeff(const Partition& p) const;
  void add(const Partition& p, const LaurentScalar& c);
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator*=(const LaurentScalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(AlgebraElement a, const LaurentScalar& s) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::size_t k_ = 0;
  std::map<Partition, LaurentScalar> terms_;
};

std::string to_string(const AlgebraElement& e);

/// p q = N^loops (p o q), extended bilinearly.
AlgebraElement algebra_product(const AlgebraElement& e, const AlgebraElement& f);
/// p ._N q = N^-eta(p,q) (p o q).
AlgebraElement deformed_product(const AlgebraElement& e, const AlgebraElement& f);
/// Keeps only the eta = 0 terms of p o q.
AlgebraElement limit_product(const AlgebraElement& e, const AlgebraElement& f);
/// p -> N^-(nc(p) - nc(p v id)) p and its inverse.
AlgebraElement normalize(const AlgebraElement& e);
AlgebraElement denormalize(const AlgebraElement& e);
/// Termwise N -> infinity; nullopt if a coefficient diverges.
std::optional<AlgebraElement> limit(const AlgebraElement& e);

LaurentScalar moment(const AlgebraElement& e, const Partition& p);
LaurentScalar cumulant(const AlgebraElement& e, const Partition& p);
LaurentScalar exclusive_moment(const AlgebraElement& e, const Partition& p);
LaurentScalar exclusive_cumulant(const AlgebraElement& e, const Partition& p);

enum class Observable { Moment, Cumulant, ExclusiveMoment, ExclusiveCumulant };
std::string_view to_string(Observable o);
Observable parse_observable(std::string_view text);
LaurentScalar observe(Observable which, const AlgebraElement& e, const Partition& p);

struct Divergence {
  Partition partition;
  int exponent = 0;
};

struct LimitFormResult {
  /// Values on level k of a form with degree bound k; other levels are zero.
  std::optional<LinearForm> form;
  std::optional<Divergence> divergence;
};

LimitFormResult limit_form(const AlgebraElement& e, Observable which);

struct ProductForms {
  LinearForm kappa;
  /// Cumulants of E against moments of F.
  LinearForm moment_right;
  /// Moments of E against cumulants of F.
  LinearForm moment_left;
};

/// Limit cumulant and moment forms of a product from the limit cumulant forms of the factors.
ProductForms limit_product_forms(const LinearForm& kappa_e, const LinearForm& kappa_f);

enum class SemigroupMode { FiniteN, Limit };

/// Coefficients of t^j, j <= order, of exp(tH) E0. Finite mode uses the partition algebra and returns
/// elements in the original basis; limit mode multiplies limit cumulant elements with the limit product.
std::vector<AlgebraElement> semigroup_taylor(const AlgebraElement& h, const AlgebraElement& e0, std::size_t order,
                                             SemigroupMode mode);

/// Random convergent element: normalized basis elements with coefficients c0 + c1/N + c2/N^2.
AlgebraElement random_convergent_element(std::size_t k, std::mt19937_64& rng, int max_terms = 6);

// ---- fluctuations ----

/// Element of the order-n development algebra: coefficients on p / X^i, i in 0..n.
class FluctElement {
 public:
  FluctElement() = default;
  FluctElement(std::size_t k, std::size_t n) : k_(k), n_(n) {}

  std::size_t k() const { return k_; }
  std::size_t order() const { return n_; }
  const std::map<std::pair<Partition, std::size_t>, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar coeff(const Partition& p, std::size_t i) const;
  void add(const Partition& p, std::size_t i, const LaurentScalar& c);

  FluctElement& operator+=(const FluctElement& o);
  friend bool operator==(const FluctElement&, const FluctElement&) = default;

 private:
  std::size_t k_ = 0, n_ = 0;
  std::map<std::pair<Partition, std::size_t>, LaurentScalar> terms_;
};

std::string to_string(const FluctElement& e);

/// (p/X^i)(q/X^j) = N^-max(i+j+eta-n, 0) (p o q)/X^min(i+j+eta, n).
FluctElement fluct_product(const FluctElement& e, const FluctElement& f);
/// delta_{i+j+eta <= n} (p o q)/X^(i+j+eta).
FluctElement fluct_limit_product(const FluctElement& e, const FluctElement& f);
std::optional<FluctElement> limit(const FluctElement& e);
/// Coefficients below order n are N-free and those at order n converge.
bool fluct_converges(const FluctElement& e);
/// Sum of c N^-i N^-(nc(p) - nc(p v id)) p.
AlgebraElement evaluation(const FluctElement& e);
/// Order-n expansion of the cumulants of e; requires convergent cumulants.
FluctElement lift(const AlgebraElement& e, std::size_t n);
/// Embeds p as p / X^0.
FluctElement embed(const AlgebraElement& e, std::size_t n);

/// Forms indexed by (p, i): by_order[i] is a form with the common degree bound.
struct FluctForm {
  std::vector<LinearForm> by_order;
  std::size_t order() const { return by_order.empty() ? 0 : by_order.size() - 1; }
  friend bool operator==(const FluctForm&, const FluctForm&) = default;
};

FluctForm fluct_zero(std::size_t degree_bound, std::size_t n);

struct FluctFormResult {
  std::optional<FluctForm> form;
  std::optional<Divergence> divergence;
};

/// Coefficients of N^-i, i <= n, of the moments or cumulants of e; fails on positive exponents.
FluctFormResult fluct_limit_form(const AlgebraElement& e, Observable which, std::size_t n);
/// Limits of the coefficients of a convergent fluctuation element, as a cumulant array.
std::optional<FluctForm> fluct_cumulants(const FluctElement& e);

/// m^{i0}_p = sum over df(p', p) <= i0 of kappa^{i0 - df(p',p)}_{p'}.
FluctForm fluct_moments_from_cumulants(const FluctForm& kappa);
FluctForm fluct_cumulants_from_moments(const FluctForm& m);

/// kappa^{i0}(EF): sum over p1 o p2 = p0 and i1 + i2 + eta = i0.
FluctForm fluct_boxtimes(const FluctForm& a, const FluctForm& b);
/// Sum over the nc-additive two-part factorizations of p0 with i1 + i2 = i0.
FluctForm fluct_boxplus(const FluctForm& a, const FluctForm& b);
/// m^{i0}_{p0}(EF) from cumulants of E and moments of F.
FluctForm fluct_moment_product_right(const FluctForm& kappa_e, const FluctForm& m_f);
/// m^{i0}_{p0}(EF) from moments of E and cumulants of F.
FluctForm fluct_moment_product_left(const FluctForm& m_e, const FluctForm& kappa_f);

struct Factorization {
  Partition first, second;
  /// Element subset I of {0..2k-1}, as a bit mask.
  std::uint32_t subset = 0;
};

/// All (p_I, p_{I^c}, I) with nc(p_I) + nc(p_{I^c}) = nc(p).
std::vector<Factorization> two_factorizations(const Partition& p);

}  // namespace pfc
