#include "pfc/partition.hpp"

#include <algorithm>
#include <numeric>

namespace pfc {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Partition Partition::from_labels(std::span<const int> labels) {
  if (labels.size() > 255) throw SizeLimitError("ground set larger than 255 elements");
  Partition p;
  p.label_.resize(labels.size());
  std::vector<std::pair<int, std::uint8_t>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto& e) { return e.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], static_cast<std::uint8_t>(seen.size()));
      p.label_[i] = seen.back().second;
    } else {
      p.label_[i] = it->second;
    }
  }
  p.nc_ = seen.size();
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<Block>& blocks) {
  std::vector<int> labels(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ParseError("empty block");
    for (auto e : blocks[b]) {
      if (e >= n) throw ParseError("element out of range: " + std::to_string(e));
      if (labels[e] != -1) throw ParseError("element appears twice: " + std::to_string(e));
      labels[e] = static_cast<int>(b);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (labels[i] == -1) throw ParseError("element missing: " + std::to_string(i));
  return from_labels(labels);
}

Partition Partition::singletons(std::size_t n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

Partition Partition::one_block(std::size_t n) {
  std::vector<int> labels(n, 0);
  return from_labels(labels);
}

std::vector<Partition::Block> Partition::blocks() const {
  std::vector<Block> out(nc_);
  for (std::size_t i = 0; i < label_.size(); ++i) out[label_[i]].push_back(i);
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ull ^ p.size();
  for (auto l : p.labels()) h = (h ^ l) * 1099511628211ull;
  return h;
}

void require_same_ground(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw OperandMismatch("ground sets differ: " + std::to_string(p.size()) + " vs " + std::to_string(q.size()));
}

Partition join(const Partition& p, const Partition& q) {
  require_same_ground(p, q);
  const std::size_t n = p.size();
  UnionFind uf(n);
  std::vector<int> first_p(p.nc(), -1), first_q(q.nc(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    auto& fp = first_p[p.label(i)];
    if (fp < 0) fp = static_cast<int>(i); else uf.unite(i, fp);
    auto& fq = first_q[q.label(i)];
    if (fq < 0) fq = static_cast<int>(i); else uf.unite(i, fq);
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(uf.find(i));
  return Partition::from_labels(labels);
}

Partition meet(const Partition& p, const Partition& q) {
  require_same_ground(p, q);
  std::vector<int> labels(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) labels[i] = static_cast<int>(p.label(i) * 256 + q.label(i));
  return Partition::from_labels(labels);
}

bool is_finer(const Partition& p, const Partition& q) {
  require_same_ground(p, q);
  std::vector<int> image(p.nc(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int& img = image[p.label(i)];
    if (img < 0) img = static_cast<int>(q.label(i));
    else if (img != static_cast<int>(q.label(i))) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(GroundSet ground, std::size_t max_ground) {
  const std::size_t n = ground.size;
  if (n > max_ground)
    throw SizeLimitError("ground size " + std::to_string(n) + " exceeds bound " + std::to_string(max_ground));
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(bell_number(n)));
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // a[i] <= 1 + max(a[0..i-1]); m[i] = max(a[0..i])
  std::vector<int> a(n, 0), m(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(a));
    std::size_t i = n - 1;
    while (i > 0 && a[i] == m[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    m[i] = std::max(m[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      m[j] = m[i];
    }
  }
  return out;
}

std::uint64_t bell_number(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::string format_plain(const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += " | ";
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(block[j] + 1);
    }
  }
  return out;
}

}  // namespace pfc
