#include "pfc/transforms.hpp"

#include "pfc/geometry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace pfc {

namespace {

constexpr std::size_t kLevels = PkCatalog::kMaxDegree + 1;

std::size_t checked_level(std::size_t k) {
  if (k >= kLevels) throw SizeLimitError("degree " + std::to_string(k) + " exceeds the catalog bound");
  return k;
}

std::size_t index_in(const Partition& p) { return PkCatalog::get(degree(p)).index_of(p); }

using BelowFn = const std::vector<std::uint32_t>& (PkCatalog::*)(std::size_t) const;

LinearForm sum_below(const LinearForm& phi, BelowFn below) {
  LinearForm out(phi.degree_bound());
  for (std::size_t k = 0; k <= phi.degree_bound(); ++k) {
    const auto& cat = PkCatalog::get(k);
    const auto& in = phi.level(k);
    auto& lv = out.level(k);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (auto j : (cat.*below)(i)) lv[i] += in[j];
  }
  return out;
}

LinearForm solve_below(const LinearForm& phi, BelowFn below) {
  LinearForm out(phi.degree_bound());
  for (std::size_t k = 0; k <= phi.degree_bound(); ++k) {
    const auto& cat = PkCatalog::get(k);
    const auto& in = phi.level(k);
    auto& lv = out.level(k);
    for (auto i : cat.by_height()) {
      Rational v = in[i];
      for (auto j : (cat.*below)(i))
        if (j != i) v -= lv[j];
      lv[i] = v;
    }
  }
  return out;
}

template <class V, class Rel>
bool all_tensor_pairs(const Form<V>& phi, Rel rel) {
  const std::size_t bound = phi.degree_bound();
  for (std::size_t a = 0; a <= bound; ++a)
    for (std::size_t b = 0; a + b <= bound; ++b) {
      const auto& ca = PkCatalog::get(a);
      const auto& cb = PkCatalog::get(b);
      const auto& cab = PkCatalog::get(a + b);
      for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j) {
          const auto t = cab.index_of(tensor(ca.at(i), cb.at(j)));
          if (!rel(phi.level(a + b)[t], phi.level(a)[i], phi.level(b)[j], ca.at(i), cb.at(j))) return false;
        }
    }
  return true;
}

template <class V>
bool invariant(const Form<V>& phi) {
  for (std::size_t k = 0; k <= phi.degree_bound(); ++k) {
    const auto& reps = orbit_rep_table(k);
    const auto& lv = phi.level(k);
    for (std::size_t i = 0; i < lv.size(); ++i)
      if (!(lv[i] == lv[reps[i]])) return false;
  }
  return true;
}

bool is_id(const Partition& p) { return p == make_identity(degree(p)); }
bool is_zero_k(const Partition& p) { return degree(p) == 0 || p == make_zero(degree(p)); }

struct FamilyOrder {
  std::vector<std::uint32_t> members;  // in height order
  std::vector<std::vector<std::uint32_t>> below;  // strictly below, parallel to members
};

const FamilyOrder& family_order(Family family, std::size_t k) {
  static std::mutex mu;
  static std::map<std::pair<int, std::size_t>, std::unique_ptr<FamilyOrder>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{static_cast<int>(family), k}];
  if (slot) return *slot;
  auto fo = std::make_unique<FamilyOrder>();
  const auto& cat = PkCatalog::get(k);
  for (auto i : cat.by_height())
    if (family_contains(family, cat.at(i))) fo->members.push_back(i);
  const auto id = make_identity(k);
  fo->below.resize(fo->members.size());
  for (std::size_t a = 0; a < fo->members.size(); ++a)
    for (std::size_t b = 0; b < fo->members.size(); ++b)
      if (a != b && in_order(OrderKind::Geodesic, id, cat.at(fo->members[b]), cat.at(fo->members[a])))
        fo->below[a].push_back(fo->members[b]);
  slot = std::move(fo);
  return *slot;
}

}  // namespace

// ---- orbits ----

Partition conjugate(const Partition& p, const std::vector<std::size_t>& sigma) {
  const std::size_t k = degree(p);
  if (sigma.size() != k) throw OperandMismatch("permutation size differs from the degree");
  std::vector<int> labels(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[sigma[i]] = static_cast<int>(p.label(i));
    labels[k + sigma[i]] = static_cast<int>(p.label(k + i));
  }
  return Partition::from_labels(labels);
}

Orbit orbit_of(const Partition& p, std::size_t max_degree) {
  const std::size_t k = degree(p);
  if (k > max_degree)
    throw SizeLimitError("orbit canonicalization limited to degree " + std::to_string(max_degree));
  Partition best = p;
  for (const auto& sigma : all_permutations(k)) {
    auto c = conjugate(p, sigma);
    if (c < best) best = std::move(c);
  }
  return Orbit{k, best};
}

std::vector<Orbit> irreducible_factors(const Orbit& o) {
  std::vector<Orbit> out;
  for (const auto& cycle : structure(o.rep).cycles) out.push_back(orbit_of(extract_columns(o.rep, cycle)));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::uint32_t>& orbit_rep_table(std::size_t k) {
  static std::array<std::once_flag, kLevels> once;
  static std::array<std::vector<std::uint32_t>, kLevels> tables;
  checked_level(k);
  std::call_once(once[k], [k] {
    const auto& cat = PkCatalog::get(k);
    auto& t = tables[k];
    t.resize(cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i)
      t[i] = static_cast<std::uint32_t>(cat.index_of(orbit_of(cat.at(i)).rep));
  });
  return tables[k];
}

// ---- transforms ----

LinearForm m_transform(const LinearForm& phi) { return sum_below(phi, &PkCatalog::geodesic_below); }
LinearForm r_transform(const LinearForm& phi) { return solve_below(phi, &PkCatalog::geodesic_below); }
LinearForm m_to_c(const LinearForm& phi) { return sum_below(phi, &PkCatalog::finer_below); }
LinearForm m_to_c_inverse(const LinearForm& phi) { return solve_below(phi, &PkCatalog::finer_below); }
LinearForm m_c_to(const LinearForm& phi) { return sum_below(phi, &PkCatalog::coarser_below); }
LinearForm m_c_to_inverse(const LinearForm& phi) { return solve_below(phi, &PkCatalog::coarser_below); }

const std::vector<std::vector<SplitTerm>>& cycle_splits(std::size_t k) {
  static std::array<std::once_flag, kLevels> once;
  static std::array<std::vector<std::vector<SplitTerm>>, kLevels> tables;
  checked_level(k);
  std::call_once(once[k], [k] {
    const auto& cat = PkCatalog::get(k);
    auto& t = tables[k];
    t.resize(cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto& p = cat.at(i);
      const auto cycles = structure(p).cycles;
      const std::size_t r = cycles.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        std::vector<std::size_t> in, out;
        for (std::size_t c = 0; c < r; ++c) {
          auto& dst = (mask >> c) & 1 ? in : out;
          dst.insert(dst.end(), cycles[c].begin(), cycles[c].end());
        }
        std::sort(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        SplitTerm s;
        s.k1 = static_cast<std::uint8_t>(in.size());
        s.k2 = static_cast<std::uint8_t>(out.size());
        s.i1 = static_cast<std::uint32_t>(index_in(extract_columns(p, in)));
        s.i2 = static_cast<std::uint32_t>(index_in(extract_columns(p, out)));
        t[i].push_back(s);
      }
    }
  });
  return tables[k];
}

// ---- counits ----

LinearForm counit_plus(std::size_t degree_bound) {
  LinearForm f(degree_bound);
  f.level(0)[0] = 1;
  return f;
}

LinearForm counit_times(std::size_t degree_bound) {
  LinearForm f(degree_bound);
  for (std::size_t k = 0; k <= degree_bound; ++k) f.level(k)[PkCatalog::get(k).identity_index()] = 1;
  return f;
}

LinearForm counit_exclusive(std::size_t degree_bound) {
  LinearForm f(degree_bound);
  f.level(0)[0] = 1;
  for (std::size_t k = 1; k <= degree_bound; ++k) f[make_zero(k)] = 1;
  return f;
}

// ---- moment convolutions ----

LinearForm boxtimes_moment_left(const LinearForm& a, const LinearForm& b) {
  a.check(b);
  LinearForm out(a.degree_bound());
  for (std::size_t k = 0; k <= a.degree_bound(); ++k) {
    const auto& cat = PkCatalog::get(k);
    auto& lv = out.level(k);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (auto j : cat.geodesic_below(i))
        lv[i] += a.level(k)[cat.product(i, cat.transpose_index(j)).product] * b.level(k)[j];
  }
  return out;
}

LinearForm boxtimes_moment_right(const LinearForm& a, const LinearForm& b) {
  a.check(b);
  LinearForm out(a.degree_bound());
  for (std::size_t k = 0; k <= a.degree_bound(); ++k) {
    const auto& cat = PkCatalog::get(k);
    auto& lv = out.level(k);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (auto j : cat.geodesic_below(i))
        lv[i] += a.level(k)[j] * b.level(k)[cat.product(cat.transpose_index(j), i).product];
  }
  return out;
}

SeriesForm exp_convolution(const LinearForm& phi, Convolution which, std::size_t t_order) {
  const auto gen = lift<TPoly>(phi);
  auto power = lift<TPoly>(counit(which, phi.degree_bound()));
  auto out = power;
  Rational factorial = 1;
  for (std::size_t j = 1; j <= t_order; ++j) {
    power = convolve(which, gen, power);
    factorial *= static_cast<long>(j);
    auto term = power;
    term *= TPoly::monomial(Rational(1) / factorial, j);
    out += term;
  }
  return out;
}

// ---- characters ----

bool is_conjugation_invariant(const LinearForm& phi) { return invariant(phi); }

bool is_character(const LinearForm& phi) {
  if (!invariant(phi) || phi.level(0)[0] != 1) return false;
  return all_tensor_pairs(phi, [](const Rational& t, const Rational& x, const Rational& y, auto&, auto&) {
    return t == x * y;
  });
}

bool is_character_truncated(const SeriesForm& phi, std::size_t order) {
  if (!invariant(phi) || !(phi.level(0)[0].truncated(order) == TPoly(1))) return false;
  return all_tensor_pairs(phi, [order](const TPoly& t, const TPoly& x, const TPoly& y, auto&, auto&) {
    return t.truncated(order) == (x * y).truncated(order);
  });
}

bool is_infinitesimal_character(const LinearForm& phi, Convolution which) {
  if (!invariant(phi)) return false;
  auto unit = [which](const Partition& p) {
    return which == Convolution::Plus ? degree(p) == 0 : is_id(p);
  };
  const bool ok = all_tensor_pairs(
      phi, [&](const Rational& t, const Rational& x, const Rational& y, const Partition& p1, const Partition& p2) {
        return t == x * Rational(unit(p2) ? 1 : 0) + Rational(unit(p1) ? 1 : 0) * y;
      });
  if (!ok) return false;
  if (which == Convolution::Times && phi.degree_bound() >= 1) {
    const Rational a = phi(make_identity(1));
    for (std::size_t k = 0; k <= phi.degree_bound(); ++k)
      if (phi(make_identity(k)) != a * static_cast<long>(k)) return false;
  }
  return true;
}

bool is_exclusive_infinitesimal_character(const LinearForm& phi) {
  if (!invariant(phi) || phi.level(0)[0] != 0) return false;
  for (std::size_t k = 1; k <= phi.degree_bound(); ++k) {
    const auto& cat = PkCatalog::get(k);
    for (std::size_t i = 0; i < cat.size(); ++i)
      if (phi.level(k)[i] != 0 && !structure(cat.at(i)).exclusive_irreducible) return false;
  }
  return true;
}

bool is_additive_character(const LinearForm& phi) {
  if (!invariant(phi)) return false;
  return all_tensor_pairs(phi, [](const Rational& t, const Rational& x, const Rational& y, auto&, auto&) {
    return t == x + y;
  });
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  const long n = num(rng);
  const long d = den(rng);
  return Rational(n) / d;
}

LinearForm random_invariant_form(std::size_t degree_bound, std::mt19937_64& rng) {
  LinearForm f(degree_bound);
  for (std::size_t k = 0; k <= degree_bound; ++k) {
    const auto& reps = orbit_rep_table(k);
    auto& lv = f.level(k);
    for (std::size_t i = 0; i < lv.size(); ++i)
      if (reps[i] == i) lv[i] = random_rational(rng);
    for (std::size_t i = 0; i < lv.size(); ++i) lv[i] = lv[reps[i]];
  }
  return f;
}

namespace {

// Calls value(p, cycles) for every p in height-independent catalog order, level by level.
template <class Fn>
LinearForm build_by_cycles(std::size_t degree_bound, Fn value) {
  LinearForm f(degree_bound);
  for (std::size_t k = 0; k <= degree_bound; ++k) {
    const auto& cat = PkCatalog::get(k);
    for (std::size_t i = 0; i < cat.size(); ++i) f.level(k)[i] = value(f, k, i, structure(cat.at(i)).cycles);
  }
  return f;
}

// Lazily drawn value per irreducible orbit, drawn in catalog order.
struct OrbitValues {
  std::mt19937_64& rng;
  std::map<std::pair<std::size_t, std::uint32_t>, Rational> values;
  Rational get(std::size_t k, std::size_t i) {
    const auto key = std::make_pair(k, orbit_rep_table(k)[i]);
    auto it = values.find(key);
    if (it == values.end()) it = values.emplace(key, random_rational(rng)).first;
    return it->second;
  }
};

}  // namespace

LinearForm random_character(std::size_t degree_bound, std::mt19937_64& rng) {
  OrbitValues vals{rng, {}};
  return build_by_cycles(degree_bound, [&](const LinearForm& f, std::size_t k, std::size_t i, const auto& cycles) {
    if (k == 0) return Rational(1);
    if (cycles.size() == 1) return vals.get(k, i);
    const auto& p = PkCatalog::get(k).at(i);
    Rational v = 1;
    for (const auto& c : cycles) v *= f(extract_columns(p, c));
    return v;
  });
}

LinearForm random_infinitesimal_character(std::size_t degree_bound, Convolution which, std::mt19937_64& rng) {
  OrbitValues vals{rng, {}};
  if (which == Convolution::Plus)
    return build_by_cycles(degree_bound, [&](const LinearForm&, std::size_t k, std::size_t i, const auto& cycles) {
      return k > 0 && cycles.size() == 1 ? vals.get(k, i) : Rational(0);
    });
  const Rational a = random_rational(rng);
  const auto id1 = make_identity(1);
  return build_by_cycles(degree_bound, [&](const LinearForm& f, std::size_t k, std::size_t i, const auto& cycles) {
    const auto& p = PkCatalog::get(k).at(i);
    if (is_id(p)) return a * static_cast<long>(k);
    const std::vector<std::size_t>* moving = nullptr;
    for (const auto& c : cycles) {
      if (c.size() == 1 && extract_columns(p, c) == id1) continue;
      if (moving) return Rational(0);
      moving = &c;
    }
    if (moving->size() == k) return vals.get(k, i);
    return f(extract_columns(p, *moving));
  });
}

// ---- family projections ----

LinearForm restrict_to(const LinearForm& phi, Family family) {
  LinearForm out(phi.degree_bound());
  for (std::size_t k = 0; k <= phi.degree_bound(); ++k)
    for (auto i : family_order(family, k).members) out.level(k)[i] = phi.level(k)[i];
  return out;
}

LinearForm m_transform_in(const LinearForm& phi, Family family) {
  LinearForm out(phi.degree_bound());
  for (std::size_t k = 0; k <= phi.degree_bound(); ++k) {
    const auto& fo = family_order(family, k);
    for (std::size_t a = 0; a < fo.members.size(); ++a) {
      Rational v = phi.level(k)[fo.members[a]];
      for (auto j : fo.below[a]) v += phi.level(k)[j];
      out.level(k)[fo.members[a]] = v;
    }
  }
  return out;
}

LinearForm r_transform_in(const LinearForm& phi, Family family) {
  LinearForm out(phi.degree_bound());
  for (std::size_t k = 0; k <= phi.degree_bound(); ++k) {
    const auto& fo = family_order(family, k);
    auto& lv = out.level(k);
    for (std::size_t a = 0; a < fo.members.size(); ++a) {
      Rational v = phi.level(k)[fo.members[a]];
      for (auto j : fo.below[a]) v -= lv[j];
      lv[fo.members[a]] = v;
    }
  }
  return out;
}

LinearForm cumulant_projection(const LinearForm& phi, Family family) {
  return r_transform_in(m_transform(phi), family);
}

LinearForm moment_projection(const LinearForm& phi, Family family) {
  return m_transform(cumulant_projection(r_transform(phi), family));
}

LinearForm exclusive_projection(const LinearForm& phi, Family family) {
  return m_to_c(cumulant_projection(m_to_c_inverse(phi), family));
}

bool is_family_invariant(const LinearForm& phi, Family family) { return moment_projection(phi, family) == phi; }

// ---- free cumulants ----

std::string to_string(const PowerSeries& s) {
  std::string out;
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    if (s.coeffs[j] == 0) continue;
    if (!out.empty()) out += " + ";
    if (j == 0 || s.coeffs[j] != 1) out += to_string(s.coeffs[j]);
    if (j > 0 && s.coeffs[j] != 1) out += "*";
    if (j == 1) out += "z";
    if (j > 1) out += "z^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

PowerSeries free_r_transform(const PowerSeries& m) {
  if (m.coeffs.empty() || m.coeffs[0] != 1) throw std::invalid_argument("moment series must start with 1");
  const std::size_t n = m.order();
  auto mul = [n](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  std::vector<Rational> zm(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) zm[i + 1] = m.coeffs[i];
  // powers[j] = (z M(z))^j truncated
  std::vector<std::vector<Rational>> powers{std::vector<Rational>(n + 1, Rational(0))};
  powers[0][0] = 1;
  for (std::size_t j = 1; j <= n; ++j) powers.push_back(mul(powers.back(), zm));
  PowerSeries c{std::vector<Rational>(n + 1, Rational(0))};
  c.coeffs[0] = 1;
  for (std::size_t d = 1; d <= n; ++d) {
    Rational v = m.coeffs[d];
    for (std::size_t j = 1; j < d; ++j) v -= c.coeffs[j] * powers[j][d];
    c.coeffs[d] = v;
  }
  return c;
}

PowerSeries psi(const LinearForm& phi, std::size_t order) {
  if (order > phi.degree_bound()) throw SizeLimitError("series order exceeds the degree bound");
  PowerSeries s;
  for (std::size_t k = 0; k <= order; ++k) s.coeffs.push_back(phi(make_cycle(k)));
  return s;
}

}  // namespace pfc
