#pragma once

#include "pfc/diagram.hpp"
#include "pfc/kreweras.hpp"
#include "pfc/linear_form.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace pfc {

// ---- orbits under conjugation ----

struct Orbit {
  std::size_t k = 0;
  /// Least conjugate sigma o p o sigma^-1.
  Partition rep;
  friend bool operator==(const Orbit&, const Orbit&) = default;
  friend auto operator<=>(const Orbit& a, const Orbit& b) { return a.rep <=> b.rep; }
};

inline constexpr std::size_t kMaxOrbitDegree = 5;

/// Relabels the columns of p by sigma in both rows.
Partition conjugate(const Partition& p, const std::vector<std::size_t>& sigma);
Orbit orbit_of(const Partition& p, std::size_t max_degree = kMaxOrbitDegree);
/// Orbits of the restrictions of p to its cycles, sorted.
std::vector<Orbit> irreducible_factors(const Orbit& o);

/// Catalog index of the orbit representative of each element of P_k.
const std::vector<std::uint32_t>& orbit_rep_table(std::size_t k);

// ---- plain transforms (base id_k) ----

LinearForm m_transform(const LinearForm& phi);
LinearForm r_transform(const LinearForm& phi);
/// Sum over the finer-compatible order.
LinearForm m_to_c(const LinearForm& phi);
LinearForm m_to_c_inverse(const LinearForm& phi);
/// Sum over the coarser-compatible order.
LinearForm m_c_to(const LinearForm& phi);
LinearForm m_c_to_inverse(const LinearForm& phi);

// ---- coproduct tables ----

/// One term of the cycle-subset coproduct: p_I at level k1, p_{I^c} at level k2.
struct SplitTerm {
  std::uint8_t k1 = 0, k2 = 0;
  std::uint32_t i1 = 0, i2 = 0;
};
const std::vector<std::vector<SplitTerm>>& cycle_splits(std::size_t k);

// ---- counits ----

LinearForm counit_plus(std::size_t degree_bound);
LinearForm counit_times(std::size_t degree_bound);
/// delta at 0_k for every k, with 0_0 the empty partition.
LinearForm counit_exclusive(std::size_t degree_bound);

template <class V>
Form<V> lift(const LinearForm& f) {
  Form<V> out(f.degree_bound());
  for (std::size_t k = 0; k <= f.degree_bound(); ++k)
    for (std::size_t i = 0; i < f.level(k).size(); ++i) out.level(k)[i] = V(f.level(k)[i]);
  return out;
}

// ---- convolutions ----

template <class V>
Form<V> boxplus(const Form<V>& a, const Form<V>& b) {
  a.check(b);
  Form<V> out(a.degree_bound());
  for (std::size_t k = 0; k <= a.degree_bound(); ++k) {
    const auto& splits = cycle_splits(k);
    auto& lv = out.level(k);
    for (std::size_t i = 0; i < lv.size(); ++i)
      for (const auto& s : splits[i]) lv[i] += a.level(s.k1)[s.i1] * b.level(s.k2)[s.i2];
  }
  return out;
}

template <class V>
Form<V> boxtimes(const Form<V>& a, const Form<V>& b) {
  a.check(b);
  Form<V> out(a.degree_bound());
  for (std::size_t k = 0; k <= a.degree_bound(); ++k) {
    const auto& cat = PkCatalog::get(k);
    const auto& la = a.level(k);
    const auto& lb = b.level(k);
    auto& lv = out.level(k);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j) {
        const auto& e = cat.product(i, j);
        if (e.eta == 0) lv[e.product] += la[i] * lb[j];
      }
  }
  return out;
}

enum class Convolution { Plus, Times };

/// (a g b)(p) = sum over q <= p of a(p o tq) b(q).
LinearForm boxtimes_moment_left(const LinearForm& a, const LinearForm& b);
/// (a d b)(p) = sum over q <= p of a(q) b(tq o p).
LinearForm boxtimes_moment_right(const LinearForm& a, const LinearForm& b);

template <class V>
Form<V> convolve(Convolution which, const Form<V>& a, const Form<V>& b) {
  return which == Convolution::Plus ? boxplus(a, b) : boxtimes(a, b);
}

inline LinearForm counit(Convolution which, std::size_t degree_bound) {
  return which == Convolution::Plus ? counit_plus(degree_bound) : counit_times(degree_bound);
}

/// sum_{j <= t_order} t^j phi^{*j} / j!.
SeriesForm exp_convolution(const LinearForm& phi, Convolution which, std::size_t t_order);

// ---- characters ----

bool is_conjugation_invariant(const LinearForm& phi);
/// Invariant, phi(empty) = 1 and phi(p1 (x) p2) = phi(p1) phi(p2) within the degree bound.
bool is_character(const LinearForm& phi);
/// Same multiplicativity, compared coefficientwise up to t^order.
bool is_character_truncated(const SeriesForm& phi, std::size_t order);
bool is_infinitesimal_character(const LinearForm& phi, Convolution which);
/// Invariant, zero at the empty partition and supported on exclusive-irreducible partitions.
bool is_exclusive_infinitesimal_character(const LinearForm& phi);
bool is_additive_character(const LinearForm& phi);

Rational random_rational(std::mt19937_64& rng);
/// Random value per orbit.
LinearForm random_invariant_form(std::size_t degree_bound, std::mt19937_64& rng);
/// Random values on irreducible orbits, extended multiplicatively.
LinearForm random_character(std::size_t degree_bound, std::mt19937_64& rng);
LinearForm random_infinitesimal_character(std::size_t degree_bound, Convolution which, std::mt19937_64& rng);

// ---- family projections ----

/// Zero off the family (E_A o R_A).
LinearForm restrict_to(const LinearForm& phi, Family family);
/// Moment transform computed inside the family; the input is first restricted.
LinearForm m_transform_in(const LinearForm& phi, Family family);
LinearForm r_transform_in(const LinearForm& phi, Family family);
LinearForm cumulant_projection(const LinearForm& phi, Family family);
LinearForm moment_projection(const LinearForm& phi, Family family);
LinearForm exclusive_projection(const LinearForm& phi, Family family);
/// Fixed point of the moment projection.
bool is_family_invariant(const LinearForm& phi, Family family);

// ---- free cumulants ----

struct PowerSeries {
  /// coeffs[j] is the coefficient of z^j; the truncation order is coeffs.size() - 1.
  std::vector<Rational> coeffs;
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

std::string to_string(const PowerSeries& s);

/// Solves C[z M(z)] = M(z) coefficientwise. Requires M(0) = 1.
PowerSeries free_r_transform(const PowerSeries& m);
/// sum_k phi((1..k)) z^k for k up to `order` (at most the degree bound).
PowerSeries psi(const LinearForm& phi, std::size_t order);

}  // namespace pfc
