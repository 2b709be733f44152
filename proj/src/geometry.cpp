#include "pfc/geometry.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace pfc {

namespace {

std::int64_t ncj(const Partition& p, const Partition& q) {
  return static_cast<std::int64_t>(join(p, q).nc());
}

// Replace the block with label `label` by two blocks: elements in `part` keep the label.
Partition cut_block(const Partition& p, std::size_t label, const std::vector<std::size_t>& part) {
  std::vector<int> labels(p.labels().begin(), p.labels().end());
  const int fresh = static_cast<int>(p.nc());
  std::vector<bool> in_part(p.size(), false);
  for (auto e : part) in_part[e] = true;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.label(i) == label && !in_part[i]) labels[i] = fresh;
  return Partition::from_labels(labels);
}

// Every split of `block` into two nonempty parts; the part holding block[0] is returned.
std::vector<std::vector<std::size_t>> two_splits(const Partition::Block& block) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t m = block.size();
  if (m < 2 || m > 24) return out;
  const std::uint32_t full = (1u << (m - 1)) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<std::size_t> part{block[0]};
    for (std::size_t j = 1; j < m; ++j)
      if (mask & (1u << (j - 1))) part.push_back(block[j]);
    out.push_back(std::move(part));
  }
  return out;
}

void sort_unique(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::int64_t factorial(std::int64_t n) {
  std::int64_t f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Geodesic: return "geodesic";
    case OrderKind::CoarserCompatible: return "coarser";
    case OrderKind::FinerCompatible: return "finer";
    case OrderKind::Refinement: return "refinement";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "geodesic" || text == "G") return OrderKind::Geodesic;
  if (text == "coarser" || text == "C") return OrderKind::CoarserCompatible;
  if (text == "finer" || text == "S") return OrderKind::FinerCompatible;
  if (text == "refinement" || text == "F") return OrderKind::Refinement;
  throw ParseError("unknown order kind: " + std::string(text));
}

HalfInt distance(const Partition& p, const Partition& q) {
  const auto j = ncj(p, q);
  return HalfInt::from_doubled(static_cast<std::int64_t>(p.nc() + q.nc()) - 2 * j);
}

HalfInt defect(const Partition& b, const Partition& q, const Partition& p) {
  require_same_ground(b, q);
  require_same_ground(q, p);
  const auto v = static_cast<std::int64_t>(q.nc()) - ncj(q, b) - ncj(p, q) + ncj(p, b);
  return HalfInt::from_int(v);
}

bool in_order(OrderKind kind, const Partition& b, const Partition& q, const Partition& p) {
  require_same_ground(q, p);
  switch (kind) {
    case OrderKind::Geodesic:
      return defect(b, q, p) == HalfInt{};
    case OrderKind::CoarserCompatible:
      require_same_ground(b, p);
      return is_finer(p, q) && ncj(q, b) == ncj(p, b);
    case OrderKind::FinerCompatible:
      require_same_ground(b, p);
      return is_finer(q, p) &&
             static_cast<std::int64_t>(q.nc()) - ncj(q, b) == static_cast<std::int64_t>(p.nc()) - ncj(p, b);
    case OrderKind::Refinement:
      return is_finer(q, p);
  }
  return false;
}

std::vector<Partition> segment(const Partition& p1, const Partition& p2, std::size_t max_ground) {
  require_same_ground(p1, p2);
  std::vector<Partition> out;
  for (auto& q : enumerate_partitions(p1.ground(), max_ground))
    if (defect(p1, q, p2) == HalfInt{}) out.push_back(q);
  return out;
}

std::vector<Partition::Block> pivotal_blocks(const Partition& b, const Partition& p) {
  require_same_ground(b, p);
  const auto base = ncj(p, b);
  std::vector<Partition::Block> out;
  auto blocks = p.blocks();
  for (std::size_t l = 0; l < blocks.size(); ++l)
    for (auto& part : two_splits(blocks[l]))
      if (ncj(cut_block(p, l, part), b) == base + 1) {
        out.push_back(blocks[l]);
        break;
      }
  return out;
}

std::vector<Partition> split_step(const Partition& b, const Partition& p) {
  require_same_ground(b, p);
  const auto base = ncj(p, b);
  std::vector<Partition> out;
  auto blocks = p.blocks();
  for (std::size_t l = 0; l < blocks.size(); ++l)
    for (auto& part : two_splits(blocks[l])) {
      auto q = cut_block(p, l, part);
      if (ncj(q, b) == base + 1) out.push_back(std::move(q));
    }
  sort_unique(out);
  return out;
}

std::vector<Partition> admissible_splits(const Partition& b, const Partition& p) {
  std::unordered_set<Partition> seen{p};
  std::deque<Partition> work{p};
  while (!work.empty()) {
    auto cur = std::move(work.front());
    work.pop_front();
    for (auto& q : split_step(b, cur))
      if (seen.insert(q).second) work.push_back(q);
  }
  std::vector<Partition> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> admissible_gluings(const Partition& b, const Partition& p, std::size_t max_blocks) {
  require_same_ground(b, p);
  const auto target = ncj(p, b);
  std::vector<Partition> out;
  for (auto& merge : enumerate_partitions(GroundSet{p.nc()}, max_blocks)) {
    std::vector<int> labels(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) labels[i] = merge.label(p.label(i));
    auto q = Partition::from_labels(labels);
    if (ncj(q, b) == target) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrderMatrix order_matrix(OrderKind kind, const Partition& b, GroundSet ground, std::size_t max_ground) {
  OrderMatrix m;
  m.kind = kind;
  m.base = b;
  m.basis = enumerate_partitions(ground, max_ground);
  const std::size_t n = m.basis.size();
  m.entries = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (in_order(kind, b, m.basis[j], m.basis[i])) m.entries(i, j) = 1;
  return m;
}

Rational refinement_mobius(const Partition& p1, const Partition& p2) {
  if (!is_finer(p1, p2)) return 0;
  std::vector<std::int64_t> inside(p2.nc(), 0);
  std::vector<bool> counted(p1.nc(), false);
  for (std::size_t i = 0; i < p1.size(); ++i)
    if (!counted[p1.label(i)]) {
      counted[p1.label(i)] = true;
      ++inside[p2.label(i)];
    }
  Rational r = ((p1.nc() - p2.nc()) % 2 == 0) ? 1 : -1;
  for (auto m : inside) r *= factorial(m - 1);
  return r;
}

Rational mobius(OrderKind kind, const Partition& b, const Partition& p1, const Partition& p2) {
  require_same_ground(p1, p2);
  switch (kind) {
    case OrderKind::Refinement:
      return refinement_mobius(p1, p2);
    case OrderKind::CoarserCompatible:
      return in_order(kind, b, p1, p2) ? refinement_mobius(p2, p1) : Rational(0);
    case OrderKind::FinerCompatible:
      return in_order(kind, b, p1, p2) ? refinement_mobius(p1, p2) : Rational(0);
    case OrderKind::Geodesic: {
      auto m = meet(p1, p2);
      if (!in_order(OrderKind::CoarserCompatible, b, p1, m)) return 0;
      if (!in_order(OrderKind::FinerCompatible, b, m, p2)) return 0;
      return refinement_mobius(m, p1) * refinement_mobius(m, p2);
    }
  }
  return 0;
}

HasseDiagram hasse_diagram(OrderKind kind, const Partition& b, GroundSet ground, std::size_t max_ground) {
  HasseDiagram h;
  h.basis = enumerate_partitions(ground, max_ground);
  const std::size_t n = h.basis.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && in_order(kind, b, h.basis[i], h.basis[j])) lt[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (std::size_t r = 0; r < n && cover; ++r)
        if (lt[i][r] && lt[r][j]) cover = false;
      if (cover) h.edges.emplace_back(i, j);
    }
  return h;
}

HalfInt bfs_distance_oracle(const Partition& p, const Partition& q) {
  require_same_ground(p, q);
  if (p.size() > kBfsMaxGround)
    throw SizeLimitError("BFS oracle limited to ground size " + std::to_string(kBfsMaxGround));
  auto all = enumerate_partitions(p.ground(), kBfsMaxGround);
  std::unordered_map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  std::vector<std::set<std::size_t>> adj(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& x = all[i];
    for (std::size_t a = 0; a < x.nc(); ++a)
      for (std::size_t c = a + 1; c < x.nc(); ++c) {
        std::vector<int> labels(x.labels().begin(), x.labels().end());
        for (auto& l : labels)
          if (l == static_cast<int>(c)) l = static_cast<int>(a);
        const std::size_t j = index.at(Partition::from_labels(labels));
        adj[i].insert(j);
        adj[j].insert(i);
      }
  }
  std::vector<std::int64_t> dist(all.size(), -1);
  const std::size_t start = index.at(p), goal = index.at(q);
  dist[start] = 0;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (v == goal) break;
    for (auto w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return HalfInt::from_doubled(dist[goal]);
}

}  // namespace pfc
