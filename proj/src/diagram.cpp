#include "pfc/diagram.hpp"

#include "pfc/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pfc {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::size_t power(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= n;
    if (r > kMaxRhoDim) throw SizeLimitError("representation dimension exceeds " + std::to_string(kMaxRhoDim));
  }
  return r;
}

template <class Accept>
IntMatrix build_rho(const Partition& p, std::size_t n, Accept accept) {
  const std::size_t k = degree(p);
  if (n == 0) throw std::invalid_argument("representation size must be positive");
  const std::size_t dim = power(n, k);
  IntMatrix m(dim, dim);
  std::vector<std::size_t> idx(2 * k);
  for (std::size_t row = 0; row < dim; ++row)
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t r = row, c = col;
      for (std::size_t a = k; a-- > 0;) {
        idx[a] = c % n;
        idx[k + a] = r % n;
        c /= n;
        r /= n;
      }
      if (accept(idx)) m(row, col) = 1;
    }
  return m;
}

}  // namespace

std::size_t degree(const Partition& p) {
  if (p.size() % 2 != 0) throw OperandMismatch("ground size " + std::to_string(p.size()) + " is not 2k");
  return p.size() / 2;
}

void require_same_degree(const Partition& p, const Partition& q) {
  if (degree(p) != degree(q))
    throw OperandMismatch("k differs: " + std::to_string(degree(p)) + " vs " + std::to_string(degree(q)));
}

Partition parse_pk(std::string_view text, std::size_t k) {
  std::vector<Partition::Block> blocks(1);
  std::size_t i = 0;
  bool any = false;
  auto trimmed = [&] {
    std::size_t a = 0, b = text.size();
    while (a < b && is_blank(text[a])) ++a;
    while (b > a && is_blank(text[b - 1])) --b;
    return text.substr(a, b - a);
  }();
  if (trimmed.empty() || trimmed == "∅") {
    if (k != 0) throw ParseError("empty partition given for k = " + std::to_string(k));
    return Partition();
  }
  while (i < text.size()) {
    char c = text[i];
    if (is_blank(c)) {
      ++i;
    } else if (c == '|') {
      if (blocks.back().empty()) throw ParseError("empty block in '" + std::string(text) + "'");
      blocks.emplace_back();
      ++i;
    } else if (c >= '0' && c <= '9') {
      std::size_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 1000) throw ParseError("element out of range");
        ++i;
      }
      bool primed = i < text.size() && text[i] == '\'';
      if (primed) ++i;
      if (v < 1 || v > k) throw ParseError("element " + std::to_string(v) + " out of range for k = " + std::to_string(k));
      blocks.back().push_back(primed ? k + v - 1 : v - 1);
      any = true;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in partition");
    }
  }
  if (!any || blocks.back().empty()) throw ParseError("empty block in '" + std::string(text) + "'");
  return Partition::from_blocks(2 * k, blocks);
}

std::string format_pk(const Partition& p) {
  const std::size_t k = degree(p);
  if (k == 0) return "∅";
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += " | ";
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) out += ' ';
      if (block[j] < k) out += std::to_string(block[j] + 1);
      else out += std::to_string(block[j] - k + 1) + "'";
    }
  }
  return out;
}

ComposeResult compose(const Partition& p, const Partition& q) {
  require_same_degree(p, q);
  const std::size_t k = degree(p);
  // rows: 0..k-1 top of q, k..2k-1 middle, 2k..3k-1 bottom of p
  UnionFind uf(3 * k);
  std::vector<int> first(q.nc(), -1);
  for (std::size_t e = 0; e < 2 * k; ++e) {
    auto& f = first[q.label(e)];
    if (f < 0) f = static_cast<int>(e); else uf.unite(e, static_cast<std::size_t>(f));
  }
  first.assign(p.nc(), -1);
  for (std::size_t e = 0; e < 2 * k; ++e) {
    auto& f = first[p.label(e)];
    if (f < 0) f = static_cast<int>(e + k); else uf.unite(e + k, static_cast<std::size_t>(f));
  }
  std::vector<int> labels(2 * k);
  std::set<std::size_t> outer;
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = static_cast<int>(uf.find(a));
    labels[k + a] = static_cast<int>(uf.find(2 * k + a));
    outer.insert(uf.find(a));
    outer.insert(uf.find(2 * k + a));
  }
  std::set<std::size_t> loops;
  for (std::size_t a = k; a < 2 * k; ++a)
    if (!outer.count(uf.find(a))) loops.insert(uf.find(a));
  return {Partition::from_labels(labels), loops.size()};
}

Partition tensor(const Partition& p, const Partition& q) {
  const std::size_t k = degree(p), l = degree(q), n = k + l;
  std::vector<int> labels(2 * n);
  const int off = static_cast<int>(p.nc());
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = p.label(a);
    labels[n + a] = p.label(k + a);
  }
  for (std::size_t b = 0; b < l; ++b) {
    labels[k + b] = off + q.label(b);
    labels[n + k + b] = off + q.label(l + b);
  }
  return Partition::from_labels(labels);
}

Partition transpose(const Partition& p) {
  const std::size_t k = degree(p);
  std::vector<int> labels(2 * k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = p.label(k + a);
    labels[k + a] = p.label(a);
  }
  return Partition::from_labels(labels);
}

Partition extract_columns(const Partition& p, const std::vector<std::size_t>& columns) {
  const std::size_t k = degree(p);
  std::vector<std::size_t> cols(columns);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  const std::size_t m = cols.size();
  std::vector<int> labels(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    if (cols[j] >= k) throw std::out_of_range("column out of range");
    labels[j] = p.label(cols[j]);
    labels[m + j] = p.label(k + cols[j]);
  }
  return Partition::from_labels(labels);
}

Partition extract(const Partition& p, const std::vector<std::size_t>& elements) {
  const std::size_t k = degree(p);
  std::vector<std::size_t> cols;
  for (auto e : elements) {
    if (e >= 2 * k) throw std::out_of_range("element out of range");
    cols.push_back(e % k);
  }
  return extract_columns(p, cols);
}

DiagramStructure structure(const Partition& p) {
  const std::size_t k = degree(p);
  DiagramStructure s;
  auto j = join(p, make_identity(k));
  s.cycles.resize(j.nc());
  for (std::size_t a = 0; a < k; ++a) s.cycles[j.label(a)].push_back(a);
  auto blocks = p.blocks();
  for (std::size_t a = 0; a < k; ++a) {
    const auto& b = blocks[p.label(a)];
    bool pair = b.size() == 2 && p.label(k + a) == p.label(a);
    if (!pair) s.support.push_back(a);
  }
  s.irreducible = j.nc() == 1;
  auto core = extract_columns(p, s.support);
  s.weakly_irreducible = core.size() == 0 || join(core, make_identity(degree(core))).nc() == 1;
  std::vector<std::size_t> non_zero;
  for (std::size_t c = 0; c < s.cycles.size(); ++c)
    if (extract_columns(p, s.cycles[c]).nc() != 1) non_zero.push_back(c);
  if (non_zero.size() == 1) {
    s.exclusive_irreducible = true;
    s.exclusive_support = s.cycles[non_zero[0]];
  } else if (non_zero.empty() && !s.cycles.empty()) {
    s.exclusive_irreducible = true;
    if (s.cycles.size() == 1) s.exclusive_support = s.cycles[0];
  }
  return s;
}

Partition make_identity(std::size_t k) {
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  return make_permutation(sigma);
}

Partition make_zero(std::size_t k) { return Partition::one_block(2 * k); }

Partition make_permutation(const std::vector<std::size_t>& sigma) {
  const std::size_t k = sigma.size();
  std::vector<int> labels(2 * k);
  for (std::size_t a = 0; a < k; ++a) {
    if (sigma[a] >= k) throw std::out_of_range("not a permutation");
    labels[a] = static_cast<int>(a);
    labels[k + sigma[a]] = static_cast<int>(a);
  }
  auto p = Partition::from_labels(labels);
  if (p.nc() != k) throw std::invalid_argument("not a permutation");
  return p;
}

Partition make_transposition(std::size_t k, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > k || j > k || i == j) throw std::out_of_range("transposition indices");
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::swap(sigma[i - 1], sigma[j - 1]);
  return make_permutation(sigma);
}

Partition make_contraction(std::size_t k, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > k || j > k || i == j) throw std::out_of_range("contraction indices");
  std::vector<int> labels(2 * k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = static_cast<int>(a);
    labels[k + a] = static_cast<int>(a);
  }
  labels[j - 1] = static_cast<int>(i - 1);
  labels[k + i - 1] = static_cast<int>(k + i);
  labels[k + j - 1] = static_cast<int>(k + i);
  return Partition::from_labels(labels);
}

Partition make_cycle(std::size_t k) {
  std::vector<std::size_t> sigma(k);
  for (std::size_t a = 0; a < k; ++a) sigma[a] = (a + 1) % k;
  return make_permutation(sigma);
}

Partition make_tau(std::size_t k) {
  std::vector<std::size_t> sigma(2 * k);
  for (std::size_t a = 0; a < 2 * k; ++a) sigma[a] = (a + k) % (2 * k);
  return make_permutation(sigma);
}

std::optional<std::vector<std::size_t>> to_permutation(const Partition& p) {
  if (!family_contains(Family::Permutations, p)) return std::nullopt;
  const std::size_t k = degree(p);
  std::vector<std::size_t> sigma(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (p.label(k + b) == p.label(a)) sigma[a] = b;
  return sigma;
}

int permutation_sign(const std::vector<std::size_t>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  int sign = 1;
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    if (seen[a]) continue;
    std::size_t len = 0;
    for (std::size_t x = a; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t k) {
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Family parse_family(std::string_view text) {
  if (text == "P") return Family::All;
  if (text == "S") return Family::Permutations;
  if (text == "B") return Family::Brauer;
  if (text == "Bs") return Family::AtMostPairs;
  if (text == "H") return Family::EvenBlocks;
  if (text == "D") return Family::CoarserThanId;
  throw ParseError("unknown family: " + std::string(text));
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::All: return "P";
    case Family::Permutations: return "S";
    case Family::Brauer: return "B";
    case Family::AtMostPairs: return "Bs";
    case Family::EvenBlocks: return "H";
    case Family::CoarserThanId: return "D";
  }
  return "?";
}

bool family_contains(Family f, const Partition& p) {
  const std::size_t k = degree(p);
  if (f == Family::All) return true;
  if (f == Family::CoarserThanId) return is_finer(make_identity(k), p);
  std::vector<std::size_t> top(p.nc(), 0), bottom(p.nc(), 0);
  for (std::size_t a = 0; a < k; ++a) {
    ++top[p.label(a)];
    ++bottom[p.label(k + a)];
  }
  for (std::size_t b = 0; b < p.nc(); ++b) {
    const std::size_t s = top[b] + bottom[b];
    switch (f) {
      case Family::Permutations:
        if (top[b] != 1 || bottom[b] != 1) return false;
        break;
      case Family::Brauer:
        if (s != 2) return false;
        break;
      case Family::AtMostPairs:
        if (s > 2) return false;
        break;
      case Family::EvenBlocks:
        if (s % 2 != 0) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

std::vector<Partition> family_members(Family f, std::size_t k, std::size_t max_ground) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(GroundSet{2 * k}, max_ground))
    if (family_contains(f, p)) out.push_back(p);
  return out;
}

std::int64_t trace_exponent(const Partition& p) {
  return static_cast<std::int64_t>(join(p, make_identity(degree(p))).nc());
}

std::int64_t pair_trace_exponent(const Partition& p, const Partition& q) {
  require_same_degree(p, q);
  return static_cast<std::int64_t>(join(p, q).nc());
}

IntMatrix rho(const Partition& p, std::size_t n) {
  std::vector<int> value(p.nc());
  return build_rho(p, n, [&](const std::vector<std::size_t>& idx) {
    std::fill(value.begin(), value.end(), -1);
    for (std::size_t e = 0; e < idx.size(); ++e) {
      int& v = value[p.label(e)];
      if (v < 0) v = static_cast<int>(idx[e]);
      else if (v != static_cast<int>(idx[e])) return false;
    }
    return true;
  });
}

IntMatrix rho_exclusive(const Partition& p, std::size_t n) {
  return build_rho(p, n, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if ((idx[a] == idx[b]) != (p.label(a) == p.label(b))) return false;
    return true;
  });
}

std::vector<std::pair<Partition, std::int64_t>> exclusive_coeffs(const Partition& p, std::size_t max_blocks) {
  std::vector<std::pair<Partition, std::int64_t>> out;
  for (auto& merge : enumerate_partitions(GroundSet{p.nc()}, max_blocks)) {
    std::vector<int> labels(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) labels[i] = merge.label(p.label(i));
    auto q = Partition::from_labels(labels);
    auto mu = refinement_mobius(p, q);
    out.emplace_back(std::move(q), static_cast<std::int64_t>(mu.convert_to<long long>()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Partition> mb(const Partition& p, Family f) {
  if (f != Family::Permutations && f != Family::Brauer)
    throw std::invalid_argument("mb is defined for permutations and Brauer partitions only");
  for (auto& q : admissible_splits(make_identity(degree(p)), p))
    if (family_contains(f, q)) return q;
  return std::nullopt;
}

}  // namespace pfc
