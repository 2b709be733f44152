#include "pfc/verify.hpp"

#include "pfc/asymptotics.hpp"
#include "pfc/diagram.hpp"
#include "pfc/geometry.hpp"
#include "pfc/kreweras.hpp"
#include "pfc/transforms.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace pfc::verify {

void Report::check(bool ok, const std::function<std::string()>& describe) {
  ++checks;
  if (ok) return;
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(describe());
}

void Report::merge(const Report& other) {
  checks += other.checks;
  failure_count += other.failure_count;
  for (const auto& f : other.failures)
    if (failures.size() < kKeptFailures) failures.push_back(f);
}

Report parallel_checks(std::string name, std::size_t count, std::size_t jobs,
                       const std::function<void(std::size_t, Report&)>& body) {
  std::vector<Report> parts(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i, parts[i]);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Report out{std::move(name)};
  for (const auto& r : parts) out.merge(r);
  return out;
}

namespace {

std::vector<Partition> all_pk(std::size_t k) { return enumerate_partitions(GroundSet{2 * k}); }

std::string show(const Partition& p) { return "{" + format_plain(p) + "}"; }
std::string show_pk(const Partition& p) { return "[" + format_pk(p) + "]"; }

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool leq(const Partition& q, const Partition& p) {
  return in_order(OrderKind::Geodesic, make_identity(degree(p)), q, p);
}

bool noncrossing(const Partition& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (p.label(a) == p.label(c) && p.label(b) == p.label(d) && p.label(a) != p.label(b)) return false;
  return true;
}

Partition cycle_partition(const std::vector<std::size_t>& sigma) {
  std::vector<int> labels(sigma.size(), -1);
  int n = 0;
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    if (labels[a] >= 0) continue;
    for (std::size_t x = a; labels[x] < 0; x = sigma[x]) labels[x] = n;
    ++n;
  }
  return Partition::from_labels(labels);
}

// Coarsest partition of the interleaved barred points keeping pi noncrossing.
Partition classical_kreweras(const Partition& pi) {
  const std::size_t k = pi.size();
  Partition best;
  bool found = false;
  for (auto& tau : enumerate_partitions(GroundSet{k})) {
    std::vector<int> labels(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      labels[2 * i] = static_cast<int>(pi.label(i));
      labels[2 * i + 1] = static_cast<int>(100 + tau.label(i));
    }
    if (!noncrossing(Partition::from_labels(labels))) continue;
    if (!found || tau.nc() < best.nc()) {
      best = tau;
      found = true;
    }
  }
  return best;
}

std::vector<std::size_t> increasing_cycles(const Partition& pi) {
  std::vector<std::size_t> sigma(pi.size());
  for (auto& block : pi.blocks())
    for (std::size_t j = 0; j < block.size(); ++j) sigma[block[j]] = block[(j + 1) % block.size()];
  return sigma;
}

LinearForm limit_of(const AlgebraElement& e, Observable which, Report& r) {
  auto res = limit_form(e, which);
  r.check(res.form.has_value(), [&] { return std::string("divergent ") + std::string(to_string(which)) + " of " + to_string(e); });
  return res.form ? *res.form : LinearForm(e.k());
}

}  // namespace

Report distance_vs_bfs(std::size_t max_ground, std::size_t jobs) {
  if (max_ground > kBfsMaxGround) throw SizeLimitError("shortest-path oracle limited to ground size 6");
  Report out{"distance = shortest path"};
  for (std::size_t n = 0; n <= max_ground; ++n) {
    auto all = enumerate_partitions(GroundSet{n});
    out.merge(parallel_checks("", all.size(), jobs, [&](std::size_t i, Report& r) {
      for (const auto& q : all)
        r.check(distance(all[i], q) == bfs_distance_oracle(all[i], q),
                [&] { return "d" + show(all[i]) + show(q) + " = " + to_string(distance(all[i], q)); });
    }));
  }
  return out;
}

Report metric_axioms(std::size_t ground, std::uint64_t seed, std::size_t samples, std::size_t jobs) {
  auto all = enumerate_partitions(GroundSet{ground});
  auto triple = [&](const Partition& a, const Partition& b, const Partition& c, Report& r) {
    r.check(distance(a, b) + distance(b, c) >= distance(a, c),
            [&] { return "triangle " + show(a) + show(b) + show(c); });
  };
  Report out{"metric axioms"};
  out.merge(parallel_checks("", all.size(), jobs, [&](std::size_t i, Report& r) {
    for (const auto& q : all) {
      r.check(distance(all[i], q) == distance(q, all[i]), [&] { return "symmetry " + show(all[i]) + show(q); });
      r.check((distance(all[i], q) == HalfInt{}) == (all[i] == q), [&] { return "separation " + show(all[i]) + show(q); });
      if (samples == 0)
        for (const auto& z : all) triple(all[i], q, z, r);
    }
  }));
  if (samples > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::vector<std::array<std::size_t, 3>> picks(samples);
    for (auto& t : picks) t = {pick(rng), pick(rng), pick(rng)};
    const std::size_t chunk = 1000;
    out.merge(parallel_checks("", (samples + chunk - 1) / chunk, jobs, [&](std::size_t c, Report& r) {
      for (std::size_t s = c * chunk; s < std::min(samples, (c + 1) * chunk); ++s)
        triple(all[picks[s][0]], all[picks[s][1]], all[picks[s][2]], r);
    }));
  }
  return out;
}

Report order_factorization(std::size_t ground, std::size_t jobs) {
  auto all = enumerate_partitions(GroundSet{ground});
  return parallel_checks("G = C S", all.size(), jobs, [&](std::size_t i, Report& r) {
    auto G = order_matrix(OrderKind::Geodesic, all[i], GroundSet{ground});
    auto C = order_matrix(OrderKind::CoarserCompatible, all[i], GroundSet{ground});
    auto S = order_matrix(OrderKind::FinerCompatible, all[i], GroundSet{ground});
    r.check(G.entries == C.entries * S.entries, [&] { return "base " + show(all[i]); });
  });
}

Report mobius_closed_form(std::size_t ground, std::size_t jobs) {
  auto all = enumerate_partitions(GroundSet{ground});
  auto out = parallel_checks("Moebius closed form", all.size(), jobs, [&](std::size_t i, Report& r) {
    const auto& b = all[i];
    for (auto kind : {OrderKind::Geodesic, OrderKind::CoarserCompatible, OrderKind::FinerCompatible,
                      OrderKind::Refinement}) {
      auto M = order_matrix(kind, b, GroundSet{ground});
      auto inv = inverse(M.entries);
      r.check(inv.has_value(), [&] { return "singular order matrix, base " + show(b); });
      if (!inv) continue;
      for (std::size_t x = 0; x < all.size(); ++x)
        for (std::size_t y = 0; y < all.size(); ++y)
          r.check(mobius(kind, b, all[x], all[y]) == (*inv)(y, x), [&] {
            return std::string(to_string(kind)) + " base " + show(b) + " mu" + show(all[x]) + show(all[y]);
          });
    }
  });
  out.check(refinement_mobius(Partition::singletons(3), Partition::one_block(3)) == 2,
            [] { return std::string("refinement mu(0,1) on three points"); });
  return out;
}

Report hasse_covers(std::size_t ground, std::size_t jobs) {
  auto all = enumerate_partitions(GroundSet{ground});
  return parallel_checks("Hasse covers", all.size(), jobs, [&](std::size_t i, Report& r) {
    const auto& b = all[i];
    auto g = hasse_diagram(OrderKind::Geodesic, b, GroundSet{ground});
    auto c = hasse_diagram(OrderKind::CoarserCompatible, b, GroundSet{ground});
    auto s = hasse_diagram(OrderKind::FinerCompatible, b, GroundSet{ground});
    std::set<std::pair<std::size_t, std::size_t>> uni(c.edges.begin(), c.edges.end());
    uni.insert(s.edges.begin(), s.edges.end());
    r.check(std::set(g.edges.begin(), g.edges.end()) == uni, [&] { return "cover union, base " + show(b); });
    r.check(g.basis.size() == all.size(), [&] { return "node count, base " + show(b); });
    for (auto [lo, hi] : g.edges)
      r.check(distance(b, g.basis[lo]) < distance(b, g.basis[hi]),
              [&] { return "cover " + show(g.basis[lo]) + " < " + show(g.basis[hi]) + ", base " + show(b); });
  });
}

Report trace_identities(std::size_t max_k, const std::vector<std::size_t>& sizes) {
  Report r{"trace identities"};
  for (std::size_t k = 0; k <= max_k; ++k)
    for (auto n : sizes) {
      const auto N = static_cast<std::int64_t>(n);
      auto all = all_pk(k);
      for (const auto& p : all) {
        r.check(rho(p, n).trace() == ipow(N, trace_exponent(p)), [&] { return "Tr rho" + show_pk(p); });
        for (const auto& q : all) {
          r.check((rho(p, n) * rho(transpose(q), n)).trace() == ipow(N, pair_trace_exponent(p, q)),
                  [&] { return "Tr rho" + show_pk(p) + " rho(t" + show_pk(q) + ") at N = " + std::to_string(n); });
          std::int64_t falling = 1;
          for (std::size_t j = 0; j < q.nc(); ++j) falling *= N - static_cast<std::int64_t>(j);
          const auto expected = is_finer(p, q) ? falling : 0;
          r.check((rho(p, n) * rho_exclusive(transpose(q), n)).trace() == expected, [&] {
            return "exclusive Tr rho" + show_pk(p) + " rho^c(t" + show_pk(q) + ") at N = " + std::to_string(n);
          });
        }
      }
    }
  return r;
}

Report exclusive_expansion(std::size_t max_k, std::size_t max_n) {
  Report r{"exclusive expansion"};
  for (std::size_t k = 0; k <= max_k; ++k)
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto dim = static_cast<std::size_t>(ipow(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
      auto all = all_pk(k);
      for (const auto& p : all) {
        IntMatrix sum(dim, dim);
        for (const auto& q : all)
          if (is_finer(p, q)) sum = sum + rho_exclusive(q, n);
        r.check(rho(p, n) == sum, [&] { return "rho" + show_pk(p) + " at N = " + std::to_string(n); });
        IntMatrix comb(dim, dim);
        for (const auto& [q, c] : exclusive_coeffs(p)) {
          auto m = rho(q, n);
          m *= c;
          comb = comb + m;
        }
        r.check(rho_exclusive(p, n) == comb, [&] { return "rho^c" + show_pk(p) + " at N = " + std::to_string(n); });
      }
    }
  return r;
}

Report mandelstam(const std::vector<std::size_t>& ks) {
  Report r{"Mandelstam"};
  for (auto k : ks) {
    const auto dim = static_cast<std::size_t>(ipow(static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(k)));
    IntMatrix sum(dim, dim);
    for (const auto& sigma : all_permutations(k)) {
      auto m = rho(make_permutation(sigma), k - 1);
      m *= permutation_sign(sigma);
      sum = sum + m;
    }
    r.check(sum.is_zero(), [&] { return "k = " + std::to_string(k); });
  }
  return r;
}

Report rho_injectivity(std::size_t k, std::size_t n) {
  Report r{"rho injective"};
  auto basis = all_pk(k);
  const auto dim = static_cast<std::size_t>(ipow(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
  RationalMatrix rows(basis.size(), dim * dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto m = rho(basis[i], n);
    for (std::size_t j = 0; j < dim * dim; ++j) rows(i, j) = m(j / dim, j % dim);
  }
  r.check(rank(rows) == basis.size(), [&] { return "k = " + std::to_string(k) + ", N = " + std::to_string(n); });
  return r;
}

Report noncrossing_embedding(std::size_t max_count_k, std::size_t max_iso_k) {
  Report r{"noncrossing embedding"};
  std::vector<std::uint64_t> catalan{1};
  for (std::size_t n = 1; n <= max_count_k; ++n) catalan.push_back(catalan.back() * 2 * (2 * n - 1) / (n + 1));
  for (std::size_t k = 1; k <= max_count_k; ++k) {
    auto id = make_identity(k), c = make_cycle(k);
    std::vector<std::vector<std::size_t>> below;
    for (const auto& sigma : all_permutations(k))
      if (in_order(OrderKind::Geodesic, id, make_permutation(sigma), c)) below.push_back(sigma);
    r.check(below.size() == catalan[k], [&] { return "count at k = " + std::to_string(k); });
    if (k > max_iso_k) continue;
    std::set<Partition> images;
    for (const auto& s : below) {
      auto pi = cycle_partition(s);
      r.check(noncrossing(pi), [&] { return "crossing image " + show(pi); });
      images.insert(pi);
    }
    std::size_t nc_count = 0;
    for (const auto& pi : enumerate_partitions(GroundSet{k}))
      if (noncrossing(pi)) ++nc_count;
    r.check(images.size() == nc_count, [&] { return "not onto NC at k = " + std::to_string(k); });
    for (const auto& s : below)
      for (const auto& t : below)
        r.check(in_order(OrderKind::Geodesic, id, make_permutation(s), make_permutation(t)) ==
                    is_finer(cycle_partition(s), cycle_partition(t)),
                [&] { return "order mismatch " + show_pk(make_permutation(s)) + " vs " + show_pk(make_permutation(t)); });
  }
  return r;
}

Report coarser_than_identity(std::size_t max_k) {
  Report r{"coarser than id"};
  for (std::size_t k = 0; k <= max_k; ++k) {
    auto d = family_members(Family::CoarserThanId, k);
    auto top = [k](const Partition& p) {
      std::vector<int> labels(k);
      for (std::size_t i = 0; i < k; ++i) labels[i] = static_cast<int>(p.label(i));
      return Partition::from_labels(labels);
    };
    std::set<Partition> images;
    for (const auto& p : d) images.insert(top(p));
    r.check(images.size() == d.size() && images.size() == bell_number(k),
            [&] { return "bijection at k = " + std::to_string(k); });
    auto id = make_identity(k);
    for (const auto& p : d)
      for (const auto& q : d)
        r.check(in_order(OrderKind::Geodesic, id, q, p) == is_finer(top(q), top(p)),
                [&] { return "order mismatch " + show_pk(q) + " vs " + show_pk(p); });
  }
  return r;
}

Report eta_nonnegative(std::size_t k, std::size_t jobs) {
  auto all = all_pk(k);
  return parallel_checks("eta >= 0", all.size(), jobs, [&](std::size_t i, Report& r) {
    for (const auto& q : all)
      r.check(eta(all[i], q) >= HalfInt{}, [&] { return "eta" + show_pk(all[i]) + show_pk(q); });
  });
}

Report kreweras_example() {
  Report r{"Kreweras example"};
  auto ks = kreweras_set(parse_pk("1' 2' | 1 | 2", 2), parse_pk("1 2 1' 2'", 2));
  std::set<std::string> got;
  for (const auto& c : ks.complements) got.insert(format_pk(c));
  std::set<std::string> expected{format_pk(parse_pk("1 | 2 | 1' | 2'", 2)), format_pk(parse_pk("1 | 2 | 1' 2'", 2))};
  r.check(got == expected, [&] {
    std::string s = "got";
    for (const auto& g : got) s += " [" + g + "]";
    return s;
  });
  return r;
}

Report kreweras_classical(std::size_t max_k) {
  Report r{"classical Kreweras"};
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto c = make_cycle(k);
    auto id = make_identity(k);
    for (const auto& sigma : all_permutations(k)) {
      auto s = make_permutation(sigma);
      if (!in_order(OrderKind::Geodesic, id, s, c)) continue;
      auto ks = kreweras_set(c, s);
      auto expected = make_permutation(increasing_cycles(classical_kreweras(cycle_partition(sigma))));
      r.check(ks.complements.size() == 1 && ks.complements[0] == expected, [&] { return "complement of " + show_pk(s); });
    }
  }
  return r;
}

Report defect_sum_identities(std::size_t k, std::size_t jobs) {
  auto all = all_pk(k);
  auto id = make_identity(k);
  auto id2k = make_identity(2 * k);
  auto tau = make_tau(k);
  auto df = [&](const Partition& q, const Partition& p) { return defect(id, q, p).as_int(); };
  return parallel_checks("defect sums", all.size(), jobs, [&](std::size_t i, Report& r) {
    const auto& p0 = all[i];
    for (const auto& p1 : all)
      for (const auto& p2 : all) {
        auto a = df(compose(p1, p2).product, p0) + eta(p1, p2).as_int();
        auto b = df(p1, p0) + df(p2, compose(transpose(p1), p0).product);
        auto c = df(p1, compose(p0, transpose(p2)).product) + df(p2, p0);
        auto d = defect(id2k, tensor(p1, p2), compose(tensor(p0, id), tau).product).as_int();
        r.check(a == b && b == c && c == d, [&] { return "p0 " + show_pk(p0) + " p1 " + show_pk(p1) + " p2 " + show_pk(p2); });
      }
  });
}

Report kreweras_characterization(std::size_t k, std::size_t jobs) {
  auto all = all_pk(k);
  auto tau = make_tau(k);
  auto big = make_identity(2 * k);
  auto id = make_identity(k);
  return parallel_checks("Kreweras characterization", all.size(), jobs, [&](std::size_t i, Report& r) {
    const auto& p0 = all[i];
    for (const auto& p1 : all)
      for (const auto& p2 : all) {
        const bool c1 = leq(compose(p1, p2).product, p0) && eta(p1, p2) == HalfInt{};
        const bool c2 = leq(p1, p0) && leq(p2, compose(transpose(p1), p0).product);
        const bool c3 = leq(p1, compose(p0, transpose(p2)).product) && leq(p2, p0);
        const bool c4 = in_order(OrderKind::Geodesic, big, tensor(p1, p2), compose(tensor(p0, id), tau).product);
        r.check(c1 == c2 && c2 == c3 && c3 == c4,
                [&] { return "p0 " + show_pk(p0) + " p1 " + show_pk(p1) + " p2 " + show_pk(p2); });
      }
  });
}

Report limit_associativity(std::size_t k, std::size_t jobs) {
  auto all = all_pk(k);
  std::vector<AlgebraElement> b;
  for (const auto& p : all) b.push_back(AlgebraElement::basis(p));
  return parallel_checks("limit product", all.size(), jobs, [&](std::size_t i, Report& r) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto xy = limit_product(b[i], b[j]);
      r.check(limit(deformed_product(b[i], b[j])) == xy,
              [&] { return "limit of deformed product " + show_pk(all[i]) + show_pk(all[j]); });
      for (std::size_t l = 0; l < b.size(); ++l)
        r.check(limit_product(xy, b[l]) == limit_product(b[i], limit_product(b[j], b[l])),
                [&] { return "associativity " + show_pk(all[i]) + show_pk(all[j]) + show_pk(all[l]); });
    }
  });
}

Report transform_identity(std::size_t max_k) {
  Report r{"exclusive transforms compose to M"};
  for (std::size_t k = 0; k <= max_k; ++k)
    for (const auto& p : all_pk(k)) {
      auto d = LinearForm::delta(max_k, p);
      r.check(m_c_to(m_to_c(d)) == m_transform(d), [&] { return "delta at " + show_pk(p); });
      r.check(r_transform(m_transform(d)) == d, [&] { return "R o M at " + show_pk(p); });
    }
  return r;
}

Report characters(std::uint64_t seed, std::size_t count, std::size_t t_order) {
  Report r{"characters"};
  std::mt19937_64 rng(seed);
  constexpr std::size_t bound = 3;
  for (int rep = 0; rep < 5; ++rep) {
    auto a = random_character(bound, rng), b = random_character(bound, rng);
    r.check(is_character(boxplus(a, b)), [] { return std::string("cycle-subset convolution of characters"); });
    r.check(is_character(boxtimes(a, b)), [] { return std::string("composition convolution of characters"); });
    for (const auto& img : {m_transform(a), r_transform(a), m_to_c(a), m_c_to(a)})
      r.check(is_character(img), [] { return std::string("transform of a character"); });
  }
  for (std::size_t rep = 0; rep < count; ++rep) {
    auto times = random_infinitesimal_character(bound, Convolution::Times, rng);
    auto plus = random_infinitesimal_character(bound, Convolution::Plus, rng);
    auto m = m_transform(times);
    const auto tag = " (sample " + std::to_string(rep) + ")";
    r.check(is_additive_character(m), [&] { return "M not additive" + tag; });
    r.check(r_transform(m) == times, [&] { return "R o M" + tag; });
    r.check(is_exclusive_infinitesimal_character(m_to_c(times)), [&] { return "exclusive image" + tag; });
    for (const auto& img : {m_transform(plus), r_transform(plus), m_to_c(plus)})
      r.check(is_infinitesimal_character(img, Convolution::Plus), [&] { return "cycle-subset class" + tag; });
    auto off = times;
    off[Partition::singletons(2 * bound)] += 1;
    r.check(!is_additive_character(m_transform(off)), [&] { return "perturbed form still additive" + tag; });
  }
  for (auto which : {Convolution::Plus, Convolution::Times}) {
    auto phi = random_infinitesimal_character(2, which, rng);
    r.check(is_character_truncated(exp_convolution(phi, which, t_order), t_order),
            [&] { return std::string("exponential is not a character to the requested order"); });
  }
  r.check(free_r_transform(PowerSeries{{1, 1, 2, 5, 14}}) == PowerSeries{{1, 1, 1, 1, 1}},
          [] { return std::string("Catalan moments"); });
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<Rational> a(5);
    for (auto& x : a) x = random_rational(rng);
    LinearForm chi(4);
    for (std::size_t k = 0; k <= 4; ++k)
      for (const auto& s : all_permutations(k)) {
        auto p = make_permutation(s);
        Rational v = 1;
        for (const auto& cyc : structure(p).cycles) v *= a[cyc.size()];
        chi[p] = v;
      }
    r.check(psi(r_transform_in(chi, Family::Permutations), 4) == free_r_transform(psi(chi, 4)),
            [] { return std::string("free cumulant square"); });
  }
  return r;
}

Report convergence(std::size_t max_k, std::uint64_t seed, std::size_t random_count, std::size_t jobs) {
  Report out{"limit moments and cumulants"};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k <= max_k; ++k) {
    auto ps = all_pk(k);
    std::vector<AlgebraElement> es;
    for (const auto& p : ps) es.push_back(AlgebraElement::normalized(p));
    for (std::size_t i = 0; i < random_count; ++i) es.push_back(random_convergent_element(k, rng));
    std::vector<std::pair<std::size_t, std::size_t>> geodesic_pairs;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (leq(ps[j], ps[i])) geodesic_pairs.emplace_back(i, j);
    out.merge(parallel_checks("", es.size(), jobs, [&](std::size_t a, Report& r) {
      const auto& e = es[a];
      const auto& f = es[(7 * a + 3) % es.size()];
      const auto tag = " for " + to_string(e);
      auto kappa = limit_of(e, Observable::Cumulant, r);
      auto m = limit_of(e, Observable::Moment, r);
      auto mc = limit_of(e, Observable::ExclusiveMoment, r);
      auto kc = limit_of(e, Observable::ExclusiveCumulant, r);
      r.check(m == m_transform(kappa), [&] { return "moments from cumulants" + tag; });
      r.check(m == m_c_to(mc), [&] { return "moments from exclusive moments" + tag; });
      r.check(kc == m_to_c(kappa), [&] { return "exclusive cumulants" + tag; });
      r.check(mc == kc, [&] { return "exclusive moments = exclusive cumulants" + tag; });
      for (const auto& p : ps)
        if (family_contains(Family::Brauer, p))
          r.check(mc(p) == kappa(p), [&] { return "Brauer " + show_pk(p) + tag; });
      for (auto [i0, i1] : geodesic_pairs) {
        Rational rhs = 0;
        for (const auto& pp : ps)
          if (leq(pp, ps[i0]))
            for (const auto& c : kreweras_set(pp, ps[i1]).complements) rhs += kappa(c);
        r.check(m(compose(transpose(ps[i1]), ps[i0]).product) == rhs,
                [&] { return "transposed composition p0 " + show_pk(ps[i0]) + " p1 " + show_pk(ps[i1]) + tag; });
      }
      auto kf = limit_of(f, Observable::Cumulant, r);
      auto pf = limit_product_forms(kappa, kf);
      auto ef = algebra_product(e, f);
      auto mef = limit_of(ef, Observable::Moment, r);
      r.check(limit_of(ef, Observable::Cumulant, r) == pf.kappa, [&] { return "product cumulants" + tag; });
      r.check(mef == pf.moment_right, [&] { return "product moments, right form" + tag; });
      r.check(mef == pf.moment_left, [&] { return "product moments, left form" + tag; });
      for (const auto& p0 : ps) {
        Rational v = 0;
        for (const auto& p : ps)
          for (const auto& c : kreweras_set(p0, p).complements) v += kappa(p) * kf(c);
        r.check(pf.kappa(p0) == v, [&] { return "product cumulant at " + show_pk(p0) + tag; });
      }
    }));
  }
  return out;
}

Report semigroups(std::size_t k, std::uint64_t seed, std::size_t pairs, std::size_t t_order) {
  Report r{"semigroups"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    auto h = random_convergent_element(k, rng);
    auto e0 = random_convergent_element(k, rng);
    auto fin = semigroup_taylor(h, e0, t_order, SemigroupMode::FiniteN);
    auto lim = semigroup_taylor(h, e0, t_order, SemigroupMode::Limit);
    for (std::size_t j = 0; j <= t_order; ++j)
      r.check(limit(denormalize(fin[j])) == lim[j],
              [&] { return "t^" + std::to_string(j) + " for H = " + to_string(h) + ", E0 = " + to_string(e0); });
  }
  return r;
}

Report fluctuations(std::size_t max_k, std::size_t max_n, std::uint64_t seed, std::size_t trials) {
  Report r{"fluctuations"};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k <= max_k; ++k)
    for (std::size_t t = 0; t < trials; ++t) {
      auto e = random_convergent_element(k, rng);
      auto f = random_convergent_element(k, rng);
      const auto tag = " for E = " + to_string(e) + ", F = " + to_string(f);
      r.check(fluct_product(embed(e, 0), embed(f, 0)) == embed(deformed_product(e, f), 0),
              [&] { return "order 0 product" + tag; });
      auto ef = algebra_product(e, f);
      for (std::size_t n = 0; n <= max_n; ++n) {
        const auto ntag = " at n = " + std::to_string(n) + tag;
        auto le = lift(e, n), lf = lift(f, n);
        r.check(evaluation(le) == e, [&] { return "evaluation of lift" + ntag; });
        auto prod = fluct_product(le, lf);
        r.check(evaluation(prod) == ef, [&] { return "evaluation is multiplicative" + ntag; });
        auto lim_prod = limit(prod);
        r.check(lim_prod && lim_prod == fluct_limit_product(*limit(le), *limit(lf)), [&] { return "termwise limit" + ntag; });
        auto ke = fluct_limit_form(e, Observable::Cumulant, n).form;
        auto kf = fluct_limit_form(f, Observable::Cumulant, n).form;
        auto mf = fluct_limit_form(f, Observable::Moment, n).form;
        auto me = fluct_limit_form(e, Observable::Moment, n).form;
        auto kef = fluct_limit_form(ef, Observable::Cumulant, n).form;
        auto mef = fluct_limit_form(ef, Observable::Moment, n).form;
        if (!(ke && kf && me && mf && kef && mef)) {
          r.check(false, [&] { return "divergent fluctuation form" + ntag; });
          continue;
        }
        auto conv = fluct_boxtimes(*ke, *kf);
        r.check(conv == *kef, [&] { return "cumulant product formula" + ntag; });
        r.check(fluct_cumulants(prod) == conv, [&] { return "cumulants of the lifted product" + ntag; });
        r.check(fluct_moments_from_cumulants(*kef) == *mef, [&] { return "moments from cumulants" + ntag; });
        r.check(fluct_cumulants_from_moments(*mef) == *kef, [&] { return "cumulants from moments" + ntag; });
        r.check(fluct_moment_product_right(*ke, *mf) == *mef, [&] { return "moment product, right form" + ntag; });
        r.check(fluct_moment_product_left(*me, *kf) == *mef, [&] { return "moment product, left form" + ntag; });
      }
    }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "metric",       "gcs",  "mobius",         "hasse",       "trace",      "exclusive",  "noncrossing",
      "ident",        "eta",  "caractK",        "dautresvaleurs", "limit-assoc", "mandelstam", "transforms",
      "characters",   "convergence", "semigroup", "fluctuations"};
  return names;
}

std::vector<Report> run(std::string_view suite, const Options& o) {
  if (suite == "all") {
    std::vector<Report> out;
    for (const auto& name : suite_names())
      for (auto& r : run(name, o)) out.push_back(std::move(r));
    return out;
  }
  const std::size_t ground = 2 * o.k;
  const std::size_t small_k = std::min<std::size_t>(o.k, 2);
  if (suite == "metric")
    return {distance_vs_bfs(std::min<std::size_t>(ground, 5), o.jobs),
            metric_axioms(ground, o.seed, ground > 4 ? 100000 : 0, o.jobs)};
  if (suite == "gcs") return {order_factorization(ground, o.jobs)};
  if (suite == "mobius") return {mobius_closed_form(ground, o.jobs)};
  if (suite == "hasse") return {hasse_covers(ground, o.jobs)};
  if (suite == "trace") return {trace_identities(small_k, {2, 3, 4})};
  if (suite == "exclusive") return {exclusive_expansion(small_k, 3)};
  if (suite == "noncrossing") return {noncrossing_embedding(5, 4)};
  if (suite == "ident") return {coarser_than_identity(4)};
  if (suite == "eta") return {eta_nonnegative(o.k, o.jobs)};
  if (suite == "caractK") return {kreweras_example(), kreweras_characterization(small_k, o.jobs)};
  if (suite == "dautresvaleurs") return {kreweras_classical(4), defect_sum_identities(small_k, o.jobs)};
  if (suite == "limit-assoc") return {limit_associativity(small_k, o.jobs)};
  if (suite == "mandelstam") return {mandelstam({2, 3}), rho_injectivity(2, 4)};
  if (suite == "transforms") return {transform_identity(small_k)};
  if (suite == "characters") return {characters(o.seed, 50, o.t_order)};
  if (suite == "convergence") return {convergence(small_k, o.seed, 100, o.jobs)};
  if (suite == "semigroup") return {semigroups(small_k, o.seed, 20, o.t_order)};
  if (suite == "fluctuations") return {fluctuations(small_k, o.n, o.seed, 10)};
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

}  // namespace pfc::verify
