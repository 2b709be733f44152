#include "doctest.h"

#include "pfc/diagram.hpp"
#include "pfc/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace pfc;

namespace {

// Three-row picture: vertices (row, column); q's blocks join rows 0/1, p's blocks join rows 1/2.
ComposeResult compose_oracle(const Partition& p, const Partition& q) {
  const std::size_t k = degree(p);
  const std::size_t V = 3 * k;
  std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
  auto vertex = [&](std::size_t elem, std::size_t top_row) { return elem < k ? top_row * k + elem : (top_row + 1) * k + (elem - k); };
  for (std::size_t a = 0; a < 2 * k; ++a)
    for (std::size_t b = 0; b < 2 * k; ++b) {
      if (q.label(a) == q.label(b)) adj[vertex(a, 0)][vertex(b, 0)] = true;
      if (p.label(a) == p.label(b)) adj[vertex(a, 1)][vertex(b, 1)] = true;
    }
  std::vector<int> comp(V, -1);
  int n = 0;
  for (std::size_t s = 0; s < V; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = n;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < V; ++w)
        if (adj[v][w] && comp[w] < 0) {
          comp[w] = n;
          stack.push_back(w);
        }
    }
    ++n;
  }
  std::vector<int> labels(2 * k);
  std::set<int> outer;
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = comp[a];
    labels[k + a] = comp[2 * k + a];
    outer.insert(comp[a]);
    outer.insert(comp[2 * k + a]);
  }
  std::set<int> middle;
  for (std::size_t a = k; a < 2 * k; ++a)
    if (!outer.count(comp[a])) middle.insert(comp[a]);
  return {Partition::from_labels(labels), middle.size()};
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t falling(std::int64_t n, std::int64_t m) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < m; ++i) r *= (n - i);
  return r;
}

// Blocks of a permutation's cycles as a partition of {0..k-1}.
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

bool noncrossing(const Partition& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (p.label(a) == p.label(c) && p.label(b) == p.label(d) && p.label(a) != p.label(b)) return false;
  return true;
}

std::vector<Partition> all_pk(std::size_t k) { return enumerate_partitions(GroundSet{2 * k}); }

}  // namespace

TEST_CASE("text format") {
  auto p = parse_pk("1 1' | 2' | 2 3' 5' | 3 4 4' | 5", 5);
  CHECK(p.nc() == 5);
  CHECK(parse_pk(format_pk(p), 5) == p);
  CHECK(parse_pk("1 1'|2 2'", 2) == make_identity(2));
  CHECK(parse_pk("  2 2' |1    1' ", 2) == make_identity(2));
  CHECK(parse_pk("", 0) == Partition());
  CHECK(format_pk(Partition()) == "∅");
  CHECK(format_pk(make_identity(2)) == "1 1' | 2 2'");
  CHECK_THROWS_AS(parse_pk("1 1' | 1 2 2'", 2), ParseError);
  CHECK_THROWS_AS(parse_pk("1 1' | 2", 2), ParseError);
  CHECK_THROWS_AS(parse_pk("1 1' | 3 2 2'", 2), ParseError);
  CHECK_THROWS_AS(parse_pk("1 1' || 2 2'", 2), ParseError);
  CHECK_THROWS_AS(parse_pk("1 x", 1), ParseError);
  for (std::size_t k = 0; k <= 3; ++k)
    for (auto& q : all_pk(k)) CHECK(parse_pk(format_pk(q), k) == q);
}

TEST_CASE("compose agrees with the three-row oracle") {
  for (std::size_t k = 0; k <= 2; ++k)
    for (auto& p : all_pk(k))
      for (auto& q : all_pk(k)) {
        auto c = compose(p, q);
        auto o = compose_oracle(p, q);
        REQUIRE(c.product == o.product);
        REQUIRE(c.loops == o.loops);
      }
  auto a = all_pk(3);
  for (std::size_t i = 0; i < a.size(); i += 3)
    for (std::size_t j = 0; j < a.size(); j += 5) {
      auto c = compose(a[i], a[j]);
      auto o = compose_oracle(a[i], a[j]);
      REQUIRE(c.product == o.product);
      REQUIRE(c.loops == o.loops);
    }
}

TEST_CASE("compose examples") {
  for (std::size_t k = 0; k <= 2; ++k)
    for (auto& p : all_pk(k)) {
      CHECK(compose(make_identity(k), p).product == p);
      CHECK(compose(make_identity(k), p).loops == 0);
      CHECK(compose(p, make_identity(k)).product == p);
    }
  auto c = make_contraction(2, 1, 2);
  CHECK(compose(c, c).product == c);
  CHECK(compose(c, c).loops == 1);
  for (auto& s : family_members(Family::Permutations, 2))
    for (auto& p : all_pk(2)) {
      CHECK(compose(s, p).loops == 0);
      CHECK(compose(p, s).loops == 0);
    }
  // stacking 0_2 under the all-singletons diagram
  auto sing = Partition::singletons(4);
  auto r = compose(make_zero(2), sing);
  CHECK(r.product == parse_pk("1 | 2 | 1' 2'", 2));
  CHECK(r.loops == 0);
  // permutations compose as functions: (p o q)(i) = p(q(i))
  for (auto& s : all_permutations(3))
    for (auto& t : all_permutations(3)) {
      std::vector<std::size_t> st(3);
      for (std::size_t i = 0; i < 3; ++i) st[i] = s[t[i]];
      CHECK(compose(make_permutation(s), make_permutation(t)).product == make_permutation(st));
    }
}

TEST_CASE("compose is associative with loop bookkeeping") {
  auto check = [](const Partition& p, const Partition& q, const Partition& r) {
    auto pq = compose(p, q), qr = compose(q, r);
    auto left = compose(pq.product, r), right = compose(p, qr.product);
    REQUIRE(left.product == right.product);
    REQUIRE(pq.loops + left.loops == qr.loops + right.loops);
  };
  for (auto& p : all_pk(1))
    for (auto& q : all_pk(1))
      for (auto& r : all_pk(1)) check(p, q, r);
  for (auto& p : all_pk(2))
    for (auto& q : all_pk(2))
      for (auto& r : all_pk(2)) check(p, q, r);
}

TEST_CASE("composition into permutations forces permutations, k = 2") {
  for (auto& p : all_pk(2))
    for (auto& q : all_pk(2))
      if (family_contains(Family::Permutations, compose(p, q).product)) {
        CHECK(family_contains(Family::Permutations, p));
        CHECK(family_contains(Family::Permutations, q));
      }
}

TEST_CASE("tensor, transpose and extraction") {
  for (std::size_t k = 0; k <= 2; ++k)
    for (auto& p : all_pk(k)) {
      CHECK(tensor(p, Partition()) == p);
      CHECK(tensor(Partition(), p) == p);
      CHECK(transpose(transpose(p)) == p);
      std::vector<std::size_t> all_cols(k);
      for (std::size_t i = 0; i < k; ++i) all_cols[i] = i;
      CHECK(extract_columns(p, all_cols) == p);
    }
  CHECK(tensor(make_identity(1), make_identity(1)) == make_identity(2));
  for (auto& p : all_pk(1))
    for (auto& q : all_pk(2)) {
      auto t = tensor(p, q);
      CHECK(t.nc() == p.nc() + q.nc());
      CHECK(structure(t).cycles.size() == structure(p).cycles.size() + structure(q).cycles.size());
      CHECK(extract_columns(t, {0}) == p);
      CHECK(extract_columns(t, {1, 2}) == q);
      CHECK(extract(t, {3}) == p);  // 1' pulls in column 1
    }
  CHECK(transpose(parse_pk("1 1' 3' | 2 3 | 2'", 3)) == parse_pk("1' 1 3 | 2' 3' | 2", 3));
  auto s = make_transposition(2, 1, 2);
  CHECK(transpose(s) == s);
  for (auto& sigma : all_permutations(3)) {
    std::vector<std::size_t> inv(3);
    for (std::size_t i = 0; i < 3; ++i) inv[sigma[i]] = i;
    CHECK(transpose(make_permutation(sigma)) == make_permutation(inv));
  }
  CHECK(extract(make_identity(3), {1}) == make_identity(1));
}

TEST_CASE("structure") {
  for (std::size_t k = 0; k <= 3; ++k) {
    auto s = structure(make_identity(k));
    CHECK(s.weakly_irreducible);
    CHECK(s.support.empty());
    CHECK(s.cycles.size() == k);
  }
  CHECK_FALSE(structure(Partition()).irreducible);
  auto z = structure(tensor(make_zero(1), make_zero(1)));
  CHECK(z.exclusive_irreducible);
  CHECK_FALSE(z.exclusive_support.has_value());
  CHECK(structure(make_zero(3)).irreducible);
  auto m = structure(tensor(make_transposition(2, 1, 2), make_zero(2)));
  CHECK(m.exclusive_irreducible);
  REQUIRE(m.exclusive_support.has_value());
  CHECK(*m.exclusive_support == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(m.weakly_irreducible);
  auto w = structure(tensor(make_identity(1), make_transposition(2, 1, 2)));
  CHECK(w.weakly_irreducible);
  CHECK_FALSE(w.irreducible);
  CHECK(w.support == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(structure(tensor(make_cycle(2), make_cycle(2))).exclusive_irreducible);
}

TEST_CASE("standard elements and families") {
  CHECK(make_identity(1) == parse_pk("1 1'", 1));
  CHECK(make_transposition(2, 1, 2) == parse_pk("1 2' | 2 1'", 2));
  CHECK(make_contraction(2, 1, 2) == parse_pk("1 2 | 1' 2'", 2));
  CHECK(make_contraction(3, 1, 3) == parse_pk("1 3 | 1' 3' | 2 2'", 3));
  CHECK(make_cycle(3) == parse_pk("1 2' | 2 3' | 3 1'", 3));
  CHECK(make_zero(2) == parse_pk("1 2 1' 2'", 2));
  CHECK(make_tau(1) == make_transposition(2, 1, 2));
  CHECK_THROWS(make_transposition(2, 1, 3));
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(family_contains(Family::Permutations, make_identity(k)));
    CHECK(family_contains(Family::CoarserThanId, make_zero(k)));
  }
  CHECK(family_members(Family::Brauer, 2).size() == 3);
  CHECK(family_members(Family::Permutations, 3).size() == 6);
  CHECK(family_members(Family::All, 2).size() == 15);
  // involutions in S_4 plus matchings count: |Bs_2| = matchings of 4 points = 10
  CHECK(family_members(Family::AtMostPairs, 2).size() == 10);
  // |D_k| = Bell(k)
  CHECK(family_members(Family::CoarserThanId, 3).size() == 5);
  for (auto& p : all_pk(2)) {
    if (family_contains(Family::Permutations, p)) CHECK(family_contains(Family::Brauer, p));
    if (family_contains(Family::Brauer, p)) {
      CHECK(family_contains(Family::AtMostPairs, p));
      CHECK(family_contains(Family::EvenBlocks, p));
    }
  }
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({1, 2, 0}) == 1);
}

TEST_CASE("trace exponents") {
  for (std::size_t k = 0; k <= 3; ++k) CHECK(trace_exponent(make_identity(k)) == static_cast<std::int64_t>(k));
  auto s = make_transposition(2, 1, 2);
  CHECK(trace_exponent(s) == 1);
  for (std::size_t n = 2; n <= 5; ++n) CHECK(rho(s, n).trace() == static_cast<std::int64_t>(n));
  for (auto& p : all_pk(2))
    for (auto& q : all_pk(2)) {
      auto c = compose(p, transpose(q));
      CHECK(pair_trace_exponent(p, q) == trace_exponent(c.product) + static_cast<std::int64_t>(c.loops));
    }
}

TEST_CASE("rho is a representation") {
  for (std::size_t k = 0; k <= 2; ++k) {
    CHECK(rho(make_identity(k), 3) == IntMatrix::identity(ipow(3, k)));
    for (std::size_t n = 1; n <= 3; ++n)
      for (auto& p : all_pk(k))
        for (auto& q : all_pk(k)) {
          auto c = compose(p, q);
          auto rhs = rho(c.product, n);
          rhs *= ipow(static_cast<std::int64_t>(n), static_cast<std::int64_t>(c.loops));
          REQUIRE(rho(p, n) * rho(q, n) == rhs);
          CHECK(rho(transpose(p), n) == rho(p, n).transposed());
        }
  }
  // the transposition acts as the swap sum_{a,b} E_a^b (x) E_b^a
  const std::size_t n = 3;
  IntMatrix swap(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      IntMatrix ea(n, n), eb(n, n);
      ea(a, b) = 1;
      eb(b, a) = 1;
      swap = swap + kron(ea, eb);
    }
  CHECK(rho(make_transposition(2, 1, 2), n) == swap);
  for (auto& p : all_pk(1))
    for (auto& q : all_pk(1)) CHECK(rho(tensor(p, q), 2) == kron(rho(p, 2), rho(q, 2)));
  CHECK_THROWS_AS(rho(make_identity(3), 17), SizeLimitError);
}

TEST_CASE("trace identities for k <= 2, N in 2..4") {
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::int64_t n = 2; n <= 4; ++n)
      for (auto& p : all_pk(k)) {
        CHECK(rho(p, n).trace() == ipow(n, trace_exponent(p)));
        for (auto& q : all_pk(k)) {
          CHECK((rho(p, n) * rho(transpose(q), n)).trace() == ipow(n, pair_trace_exponent(p, q)));
          auto excl = (rho(p, n) * rho_exclusive(transpose(q), n)).trace();
          auto expected = is_finer(p, q) ? falling(n, static_cast<std::int64_t>(q.nc())) : 0;
          CHECK(excl == expected);
        }
      }
}

TEST_CASE("exclusive basis") {
  for (std::size_t k = 0; k <= 2; ++k) {
    CHECK(exclusive_coeffs(make_zero(k)) == std::vector<std::pair<Partition, std::int64_t>>{{make_zero(k), 1}});
  }
  auto sing = Partition::singletons(2);
  auto ex = exclusive_coeffs(sing);
  REQUIRE(ex.size() == 2);
  CHECK(std::find(ex.begin(), ex.end(), std::pair<Partition, std::int64_t>{sing, 1}) != ex.end());
  CHECK(std::find(ex.begin(), ex.end(), std::pair<Partition, std::int64_t>{make_identity(1), -1}) != ex.end());
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t n = 1; n <= 4; ++n)
      for (auto& p : all_pk(k)) {
        IntMatrix sum(ipow(n, k), ipow(n, k));
        for (auto& q : all_pk(k))
          if (is_finer(p, q)) sum = sum + rho_exclusive(q, n);
        REQUIRE(rho(p, n) == sum);
        IntMatrix comb(ipow(n, k), ipow(n, k));
        for (auto& [q, c] : exclusive_coeffs(p)) {
          auto m = rho(q, n);
          m *= c;
          comb = comb + m;
        }
        REQUIRE(rho_exclusive(p, n) == comb);
      }
}

TEST_CASE("Mandelstam identity and injectivity") {
  for (std::size_t k = 2; k <= 3; ++k) {
    IntMatrix sum(ipow(k - 1, k), ipow(k - 1, k));
    for (auto& sigma : all_permutations(k)) {
      auto m = rho(make_permutation(sigma), k - 1);
      m *= permutation_sign(sigma);
      sum = sum + m;
    }
    CHECK(sum.is_zero());
  }
  auto basis = all_pk(2);
  RationalMatrix rows(basis.size(), 256);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto m = rho(basis[i], 4);
    for (std::size_t j = 0; j < 256; ++j) rows(i, j) = m(j / 16, j % 16);
  }
  CHECK(rank(rows) == 15);
}

TEST_CASE("noncrossing permutations below the long cycle") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (std::size_t k = 1; k <= 5; ++k) {
    auto id = make_identity(k), c = make_cycle(k);
    std::vector<std::vector<std::size_t>> below;
    for (auto& sigma : all_permutations(k))
      if (in_order(OrderKind::Geodesic, id, make_permutation(sigma), c)) below.push_back(sigma);
    CHECK(below.size() == catalan[k]);
    if (k > 4) continue;
    std::set<Partition> images;
    for (auto& s : below) {
      auto pi = cycle_partition(s);
      CHECK(noncrossing(pi));
      images.insert(pi);
    }
    std::size_t nc_count = 0;
    for (auto& pi : enumerate_partitions(GroundSet{k}))
      if (noncrossing(pi)) ++nc_count;
    CHECK(images.size() == nc_count);
    for (auto& s : below)
      for (auto& t : below)
        CHECK(in_order(OrderKind::Geodesic, id, make_permutation(s), make_permutation(t)) ==
              is_finer(cycle_partition(s), cycle_partition(t)));
  }
}

TEST_CASE("partitions coarser than id_k match partitions of k points") {
  for (std::size_t k = 0; k <= 4; ++k) {
    auto d = family_members(Family::CoarserThanId, k);
    auto restrict_top = [k](const Partition& p) {
      std::vector<int> labels(k);
      for (std::size_t i = 0; i < k; ++i) labels[i] = static_cast<int>(p.label(i));
      return Partition::from_labels(labels);
    };
    std::set<Partition> images;
    for (auto& p : d) images.insert(restrict_top(p));
    CHECK(images.size() == d.size());
    CHECK(images.size() == bell_number(k));
    auto id = make_identity(k);
    for (auto& p : d)
      for (auto& q : d) CHECK(in_order(OrderKind::Geodesic, id, q, p) == is_finer(restrict_top(q), restrict_top(p)));
  }
}

TEST_CASE("geodesic order below a tensor product splits") {
  auto check = [](std::size_t k, std::size_t l) {
    for (auto& p1 : all_pk(k))
      for (auto& p2 : all_pk(l)) {
        auto t = tensor(p1, p2);
        for (auto& q : all_pk(k + l)) {
          if (!in_order(OrderKind::Geodesic, make_identity(k + l), q, t)) continue;
          std::vector<std::size_t> left(k), right(l);
          for (std::size_t i = 0; i < k; ++i) left[i] = i;
          for (std::size_t i = 0; i < l; ++i) right[i] = k + i;
          auto q1 = extract_columns(q, left), q2 = extract_columns(q, right);
          CHECK(q == tensor(q1, q2));
          CHECK(in_order(OrderKind::Geodesic, make_identity(k), q1, p1));
          CHECK(in_order(OrderKind::Geodesic, make_identity(l), q2, p2));
        }
      }
  };
  check(1, 1);
  check(1, 2);
}

TEST_CASE("mb") {
  for (auto& p : family_members(Family::Brauer, 2)) CHECK(mb(p, Family::Brauer) == p);
  CHECK(mb(make_zero(2), Family::Brauer) == make_identity(2));
  CHECK(mb(make_zero(2), Family::Permutations) == make_identity(2));
  CHECK_FALSE(mb(Partition::singletons(2), Family::Permutations).has_value());
  for (std::size_t k = 1; k <= 3; ++k)
    for (auto& p : all_pk(k)) {
      std::size_t hits = 0;
      for (auto& q : admissible_splits(make_identity(k), p))
        if (family_contains(Family::Brauer, q)) ++hits;
      CHECK(hits <= 1);
    }
}
