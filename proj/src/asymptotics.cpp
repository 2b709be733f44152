#include "pfc/asymptotics.hpp"

#include "pfc/diagram.hpp"
#include "pfc/geometry.hpp"
#include "pfc/kreweras.hpp"
#include "pfc/transforms.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

namespace pfc {

namespace {

int norm_exp(const Partition& p) {
  return static_cast<int>(p.nc()) - static_cast<int>(join(p, make_identity(degree(p))).nc());
}

void same_k(std::size_t a, std::size_t b) {
  if (a != b) throw OperandMismatch("algebra elements of different degrees");
}

constexpr std::size_t kLevels = PkCatalog::kMaxDegree + 1;

// df(p_j, p_i) with base id_k, row i, column j.
const std::vector<std::int16_t>& defect_table(std::size_t k) {
  static std::array<std::once_flag, kLevels> once;
  static std::array<std::vector<std::int16_t>, kLevels> tables;
  if (k >= kLevels) throw SizeLimitError("degree exceeds the catalog bound");
  std::call_once(once[k], [k] {
    const auto& cat = PkCatalog::get(k);
    const auto id = make_identity(k);
    auto& t = tables[k];
    t.resize(cat.size() * cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j)
        t[i * cat.size() + j] = static_cast<std::int16_t>(defect(id, cat.at(j), cat.at(i)).as_int());
  });
  return tables[k];
}

const std::vector<std::vector<Factorization>>& factorization_table(std::size_t k) {
  static std::array<std::once_flag, kLevels> once;
  static std::array<std::vector<std::vector<Factorization>>, kLevels> tables;
  if (k >= kLevels) throw SizeLimitError("degree exceeds the catalog bound");
  std::call_once(once[k], [k] {
    const auto& cat = PkCatalog::get(k);
    auto& t = tables[k];
    t.resize(cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) t[i] = two_factorizations(cat.at(i));
  });
  return tables[k];
}

std::size_t form_bound(const FluctForm& f) {
  if (f.by_order.empty()) throw std::invalid_argument("empty fluctuation form");
  return f.by_order.front().degree_bound();
}

void same_shape(const FluctForm& a, const FluctForm& b) {
  if (a.order() != b.order() || form_bound(a) != form_bound(b))
    throw OperandMismatch("fluctuation forms of different shapes");
}

}  // namespace

// ---- AlgebraElement ----

AlgebraElement AlgebraElement::basis(const Partition& p, const LaurentScalar& c) {
  AlgebraElement e(degree(p));
  e.add(p, c);
  return e;
}

AlgebraElement AlgebraElement::normalized(const Partition& p, const LaurentScalar& c) {
  return basis(p, c * LaurentScalar::power(-norm_exp(p)));
}

LaurentScalar AlgebraElement::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void AlgebraElement::add(const Partition& p, const LaurentScalar& c) {
  if (degree(p) != k_) throw OperandMismatch("partition degree differs from the element degree");
  if (c.is_zero()) return;
  auto& slot = terms_[p];
  slot += c;
  if (slot.is_zero()) terms_.erase(p);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  same_k(k_, o.k_);
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const LaurentScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

std::string to_string(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ") [" + format_pk(p) + "]";
  }
  return out;
}

namespace {

template <class Coef>
AlgebraElement product_with(const AlgebraElement& e, const AlgebraElement& f, Coef coef) {
  same_k(e.k(), f.k());
  AlgebraElement out(e.k());
  for (const auto& [p, a] : e.terms())
    for (const auto& [q, b] : f.terms()) {
      auto c = compose(p, q);
      auto w = coef(p, q, c);
      if (w) out.add(c.product, a * b * *w);
    }
  return out;
}

}  // namespace

AlgebraElement algebra_product(const AlgebraElement& e, const AlgebraElement& f) {
  return product_with(e, f, [](auto&, auto&, const ComposeResult& c) {
    return std::optional<LaurentScalar>(LaurentScalar::power(static_cast<int>(c.loops)));
  });
}

AlgebraElement deformed_product(const AlgebraElement& e, const AlgebraElement& f) {
  return product_with(e, f, [](const Partition& p, const Partition& q, auto&) {
    return std::optional<LaurentScalar>(LaurentScalar::power(-static_cast<int>(eta(p, q).as_int())));
  });
}

AlgebraElement limit_product(const AlgebraElement& e, const AlgebraElement& f) {
  return product_with(e, f, [](const Partition& p, const Partition& q, auto&) {
    return eta(p, q) == HalfInt{} ? std::optional<LaurentScalar>(LaurentScalar(1)) : std::nullopt;
  });
}

AlgebraElement normalize(const AlgebraElement& e) {
  AlgebraElement out(e.k());
  for (const auto& [p, c] : e.terms()) out.add(p, c.shifted(-norm_exp(p)));
  return out;
}

AlgebraElement denormalize(const AlgebraElement& e) {
  AlgebraElement out(e.k());
  for (const auto& [p, c] : e.terms()) out.add(p, c.shifted(norm_exp(p)));
  return out;
}

std::optional<AlgebraElement> limit(const AlgebraElement& e) {
  AlgebraElement out(e.k());
  for (const auto& [p, c] : e.terms()) {
    auto l = c.limit();
    if (!l) return std::nullopt;
    out.add(p, *l);
  }
  return out;
}

// ---- observables ----

LaurentScalar moment(const AlgebraElement& e, const Partition& p) {
  same_k(e.k(), degree(p));
  const int base = static_cast<int>(join(p, make_identity(degree(p))).nc());
  LaurentScalar v;
  for (const auto& [q, c] : e.terms()) v += c.shifted(static_cast<int>(join(p, q).nc()) - base);
  return v;
}

LaurentScalar cumulant(const AlgebraElement& e, const Partition& p) {
  same_k(e.k(), degree(p));
  return e.coeff(p).shifted(norm_exp(p));
}

namespace {

// Coordinate on p^c in the exclusive basis: sum of the coefficients of the refinements of p.
LaurentScalar exclusive_coordinate(const AlgebraElement& e, const Partition& p) {
  LaurentScalar v;
  for (const auto& [q, c] : e.terms())
    if (is_finer(q, p)) v += c;
  return v;
}

}  // namespace

LaurentScalar exclusive_moment(const AlgebraElement& e, const Partition& p) {
  same_k(e.k(), degree(p));
  const int base = static_cast<int>(join(p, make_identity(degree(p))).nc());
  return exclusive_coordinate(e, p) * LaurentScalar::falling_factorial(static_cast<int>(p.nc())).shifted(-base);
}

LaurentScalar exclusive_cumulant(const AlgebraElement& e, const Partition& p) {
  same_k(e.k(), degree(p));
  return exclusive_coordinate(e, p).shifted(norm_exp(p));
}

std::string_view to_string(Observable o) {
  switch (o) {
    case Observable::Moment: return "moment";
    case Observable::Cumulant: return "cumulant";
    case Observable::ExclusiveMoment: return "exclusive_moment";
    case Observable::ExclusiveCumulant: return "exclusive_cumulant";
  }
  return "?";
}

Observable parse_observable(std::string_view text) {
  if (text == "moment" || text == "m") return Observable::Moment;
  if (text == "cumulant" || text == "kappa") return Observable::Cumulant;
  if (text == "exclusive_moment" || text == "mc") return Observable::ExclusiveMoment;
  if (text == "exclusive_cumulant" || text == "kappac") return Observable::ExclusiveCumulant;
  throw ParseError("unknown observable: " + std::string(text));
}

LaurentScalar observe(Observable which, const AlgebraElement& e, const Partition& p) {
  switch (which) {
    case Observable::Moment: return moment(e, p);
    case Observable::Cumulant: return cumulant(e, p);
    case Observable::ExclusiveMoment: return exclusive_moment(e, p);
    case Observable::ExclusiveCumulant: return exclusive_cumulant(e, p);
  }
  return {};
}

LimitFormResult limit_form(const AlgebraElement& e, Observable which) {
  LimitFormResult r;
  LinearForm f(e.k());
  const auto& cat = PkCatalog::get(e.k());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    auto v = observe(which, e, cat.at(i));
    auto l = v.limit();
    if (!l) {
      r.divergence = Divergence{cat.at(i), *v.max_exponent()};
      return r;
    }
    f.level(e.k())[i] = *l;
  }
  r.form = std::move(f);
  return r;
}

ProductForms limit_product_forms(const LinearForm& kappa_e, const LinearForm& kappa_f) {
  return ProductForms{boxtimes(kappa_e, kappa_f), boxtimes_moment_right(kappa_e, m_transform(kappa_f)),
                      boxtimes_moment_left(m_transform(kappa_e), kappa_f)};
}

std::vector<AlgebraElement> semigroup_taylor(const AlgebraElement& h, const AlgebraElement& e0, std::size_t order,
                                             SemigroupMode mode) {
  same_k(h.k(), e0.k());
  std::vector<AlgebraElement> out;
  if (mode == SemigroupMode::FiniteN) {
    out.push_back(e0);
    for (std::size_t j = 1; j <= order; ++j)
      out.push_back(algebra_product(h, out.back()) * LaurentScalar(Rational(1, static_cast<long>(j))));
    return out;
  }
  auto hk = limit(denormalize(h));
  auto ek = limit(denormalize(e0));
  if (!hk || !ek) throw std::domain_error("generator or initial condition does not converge");
  out.push_back(*ek);
  for (std::size_t j = 1; j <= order; ++j)
    out.push_back(limit_product(*hk, out.back()) * LaurentScalar(Rational(1, static_cast<long>(j))));
  return out;
}

AlgebraElement random_convergent_element(std::size_t k, std::mt19937_64& rng, int max_terms) {
  const auto& cat = PkCatalog::get(k);
  std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  AlgebraElement e(k);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    LaurentScalar c = LaurentScalar(random_rational(rng)) + LaurentScalar::monomial(random_rational(rng), -1) +
                      LaurentScalar::monomial(random_rational(rng), -2);
    e += AlgebraElement::normalized(cat.at(pick(rng)), c);
  }
  return e;
}

// ---- fluctuations ----

LaurentScalar FluctElement::coeff(const Partition& p, std::size_t i) const {
  auto it = terms_.find({p, i});
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void FluctElement::add(const Partition& p, std::size_t i, const LaurentScalar& c) {
  if (degree(p) != k_) throw OperandMismatch("partition degree differs from the element degree");
  if (i > n_) throw std::out_of_range("fluctuation index exceeds the order");
  if (c.is_zero()) return;
  auto key = std::make_pair(p, i);
  auto& slot = terms_[key];
  slot += c;
  if (slot.is_zero()) terms_.erase(key);
}

FluctElement& FluctElement::operator+=(const FluctElement& o) {
  same_k(k_, o.k_);
  if (n_ != o.n_) throw OperandMismatch("fluctuation elements of different orders");
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

std::string to_string(const FluctElement& e) {
  if (e.terms().empty()) return "0";
  std::string out;
  for (const auto& [key, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ") [" + format_pk(key.first) + "]/X^" + std::to_string(key.second);
  }
  return out;
}

namespace {

void same_fluct(const FluctElement& e, const FluctElement& f) {
  same_k(e.k(), f.k());
  if (e.order() != f.order()) throw OperandMismatch("fluctuation elements of different orders");
}

}  // namespace

FluctElement fluct_product(const FluctElement& e, const FluctElement& f) {
  same_fluct(e, f);
  const long n = static_cast<long>(e.order());
  FluctElement out(e.k(), e.order());
  for (const auto& [a, x] : e.terms())
    for (const auto& [b, y] : f.terms()) {
      const long s = static_cast<long>(a.second + b.second) + eta(a.first, b.first).as_int();
      auto prod = compose(a.first, b.first).product;
      out.add(prod, static_cast<std::size_t>(std::min(s, n)),
              x * y * LaurentScalar::power(-static_cast<int>(std::max(s - n, 0L))));
    }
  return out;
}

FluctElement fluct_limit_product(const FluctElement& e, const FluctElement& f) {
  same_fluct(e, f);
  const long n = static_cast<long>(e.order());
  FluctElement out(e.k(), e.order());
  for (const auto& [a, x] : e.terms())
    for (const auto& [b, y] : f.terms()) {
      const long s = static_cast<long>(a.second + b.second) + eta(a.first, b.first).as_int();
      if (s <= n) out.add(compose(a.first, b.first).product, static_cast<std::size_t>(s), x * y);
    }
  return out;
}

std::optional<FluctElement> limit(const FluctElement& e) {
  FluctElement out(e.k(), e.order());
  for (const auto& [key, c] : e.terms()) {
    auto l = c.limit();
    if (!l) return std::nullopt;
    out.add(key.first, key.second, *l);
  }
  return out;
}

bool fluct_converges(const FluctElement& e) {
  for (const auto& [key, c] : e.terms()) {
    if (key.second < e.order() && !c.is_constant()) return false;
    if (key.second == e.order() && !c.limit()) return false;
  }
  return true;
}

AlgebraElement evaluation(const FluctElement& e) {
  AlgebraElement out(e.k());
  for (const auto& [key, c] : e.terms())
    out.add(key.first, c.shifted(-static_cast<int>(key.second) - norm_exp(key.first)));
  return out;
}

FluctElement lift(const AlgebraElement& e, std::size_t n) {
  FluctElement out(e.k(), n);
  const int order = static_cast<int>(n);
  for (const auto& [p, c] : e.terms()) {
    auto kappa = c.shifted(norm_exp(p));
    if (kappa.max_exponent() && *kappa.max_exponent() > 0)
      throw std::domain_error("cumulant diverges at " + format_pk(p));
    LaurentScalar rest = kappa;
    for (int i = 0; i < order; ++i) {
      const Rational ci = kappa.coeff(-i);
      out.add(p, static_cast<std::size_t>(i), ci);
      rest -= LaurentScalar::monomial(ci, -i);
    }
    out.add(p, n, rest.shifted(order));
  }
  return out;
}

FluctElement embed(const AlgebraElement& e, std::size_t n) {
  FluctElement out(e.k(), n);
  for (const auto& [p, c] : e.terms()) out.add(p, 0, c);
  return out;
}

FluctForm fluct_zero(std::size_t degree_bound, std::size_t n) {
  return FluctForm{std::vector<LinearForm>(n + 1, LinearForm(degree_bound))};
}

FluctFormResult fluct_limit_form(const AlgebraElement& e, Observable which, std::size_t n) {
  FluctFormResult r;
  auto f = fluct_zero(e.k(), n);
  const auto& cat = PkCatalog::get(e.k());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    auto v = observe(which, e, cat.at(i));
    if (v.max_exponent() && *v.max_exponent() > 0) {
      r.divergence = Divergence{cat.at(i), *v.max_exponent()};
      return r;
    }
    for (std::size_t j = 0; j <= n; ++j) f.by_order[j].level(e.k())[i] = v.coeff(-static_cast<int>(j));
  }
  r.form = std::move(f);
  return r;
}

std::optional<FluctForm> fluct_cumulants(const FluctElement& e) {
  if (!fluct_converges(e)) return std::nullopt;
  auto f = fluct_zero(e.k(), e.order());
  for (const auto& [key, c] : e.terms()) f.by_order[key.second][key.first] = *c.limit();
  return f;
}

FluctForm fluct_moments_from_cumulants(const FluctForm& kappa) {
  const std::size_t bound = form_bound(kappa), n = kappa.order();
  auto out = fluct_zero(bound, n);
  for (std::size_t k = 0; k <= bound; ++k) {
    const auto& cat = PkCatalog::get(k);
    const auto& df = defect_table(k);
    const std::size_t sz = cat.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        const std::size_t d = static_cast<std::size_t>(df[i * sz + j]);
        for (std::size_t i0 = d; i0 <= n; ++i0) out.by_order[i0].level(k)[i] += kappa.by_order[i0 - d].level(k)[j];
      }
  }
  return out;
}

FluctForm fluct_cumulants_from_moments(const FluctForm& m) {
  const std::size_t bound = form_bound(m), n = m.order();
  auto out = fluct_zero(bound, n);
  for (std::size_t k = 0; k <= bound; ++k) {
    const auto& cat = PkCatalog::get(k);
    const auto& df = defect_table(k);
    const std::size_t sz = cat.size();
    for (std::size_t i0 = 0; i0 <= n; ++i0)
      for (auto i : cat.by_height()) {
        Rational v = m.by_order[i0].level(k)[i];
        for (std::size_t j = 0; j < sz; ++j) {
          if (j == i) continue;
          const std::size_t d = static_cast<std::size_t>(df[i * sz + j]);
          if (d <= i0) v -= out.by_order[i0 - d].level(k)[j];
        }
        out.by_order[i0].level(k)[i] = v;
      }
  }
  return out;
}

FluctForm fluct_boxtimes(const FluctForm& a, const FluctForm& b) {
  same_shape(a, b);
  const std::size_t bound = form_bound(a), n = a.order();
  auto out = fluct_zero(bound, n);
  for (std::size_t k = 0; k <= bound; ++k) {
    const auto& cat = PkCatalog::get(k);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j) {
        const auto& e = cat.product(i, j);
        for (std::size_t i1 = 0; i1 <= n; ++i1)
          for (std::size_t i2 = 0; i1 + i2 + static_cast<std::size_t>(e.eta) <= n; ++i2)
            out.by_order[i1 + i2 + e.eta].level(k)[e.product] +=
                a.by_order[i1].level(k)[i] * b.by_order[i2].level(k)[j];
      }
  }
  return out;
}

std::vector<Factorization> two_factorizations(const Partition& p) {
  const std::size_t k = degree(p);
  const std::size_t n = 2 * k;
  std::vector<Factorization> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::size_t> in, rest;
    for (std::size_t e = 0; e < n; ++e) ((mask >> e) & 1 ? in : rest).push_back(e);
    auto p1 = extract(p, in);
    auto p2 = extract(p, rest);
    if (p1.nc() + p2.nc() == p.nc()) out.push_back(Factorization{std::move(p1), std::move(p2), mask});
  }
  return out;
}

FluctForm fluct_boxplus(const FluctForm& a, const FluctForm& b) {
  same_shape(a, b);
  const std::size_t bound = form_bound(a), n = a.order();
  auto out = fluct_zero(bound, n);
  for (std::size_t k = 0; k <= bound; ++k) {
    const auto& cat = PkCatalog::get(k);
    const auto& table = factorization_table(k);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (const auto& f : table[i])
        for (std::size_t i1 = 0; i1 <= n; ++i1)
          for (std::size_t i2 = 0; i1 + i2 <= n; ++i2)
            out.by_order[i1 + i2].level(k)[i] += a.by_order[i1](f.first) * b.by_order[i2](f.second);
  }
  return out;
}

FluctForm fluct_moment_product_right(const FluctForm& kappa_e, const FluctForm& m_f) {
  same_shape(kappa_e, m_f);
  const std::size_t bound = form_bound(kappa_e), n = kappa_e.order();
  auto out = fluct_zero(bound, n);
  for (std::size_t k = 0; k <= bound; ++k) {
    const auto& cat = PkCatalog::get(k);
    const auto& df = defect_table(k);
    const std::size_t sz = cat.size();
    for (std::size_t i0 = 0; i0 < sz; ++i0)
      for (std::size_t j = 0; j < sz; ++j) {
        const std::size_t d = static_cast<std::size_t>(df[i0 * sz + j]);
        const auto target = cat.product(cat.transpose_index(j), i0).product;
        for (std::size_t a = 0; a + d <= n; ++a)
          for (std::size_t b = 0; a + b + d <= n; ++b)
            out.by_order[a + b + d].level(k)[i0] += kappa_e.by_order[a].level(k)[j] * m_f.by_order[b].level(k)[target];
      }
  }
  return out;
}

FluctForm fluct_moment_product_left(const FluctForm& m_e, const FluctForm& kappa_f) {
  same_shape(m_e, kappa_f);
  const std::size_t bound = form_bound(m_e), n = m_e.order();
  auto out = fluct_zero(bound, n);
  for (std::size_t k = 0; k <= bound; ++k) {
    const auto& cat = PkCatalog::get(k);
    const auto& df = defect_table(k);
    const std::size_t sz = cat.size();
    for (std::size_t i0 = 0; i0 < sz; ++i0)
      for (std::size_t j = 0; j < sz; ++j) {
        const std::size_t d = static_cast<std::size_t>(df[i0 * sz + j]);
        const auto target = cat.product(i0, cat.transpose_index(j)).product;
        for (std::size_t a = 0; a + d <= n; ++a)
          for (std::size_t b = 0; a + b + d <= n; ++b)
            out.by_order[a + b + d].level(k)[i0] += m_e.by_order[b].level(k)[target] * kappa_f.by_order[a].level(k)[j];
      }
  }
  return out;
}

}  // namespace pfc
