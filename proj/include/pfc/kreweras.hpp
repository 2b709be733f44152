#pragma once

#include "pfc/diagram.hpp"
#include "pfc/partition.hpp"
#include "pfc/rational.hpp"

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace pfc {

/// Defect of the pair (p, q) from composing without loss; always >= 0.
HalfInt eta(const Partition& p, const Partition& q);

struct KrewerasSet {
  Partition base;
  Partition prefix;
  /// All r with prefix o r = base and eta(prefix, r) = 0, sorted.
  std::vector<Partition> complements;
};

KrewerasSet kreweras_set(const Partition& p, const Partition& q, std::size_t max_ground = kDefaultMaxGround);

/// q is an admissible prefix of p.
bool prefix_leq(const Partition& q, const Partition& p, std::size_t max_ground = kDefaultMaxGround);

struct ProductEntry {
  std::uint32_t product = 0;
  std::uint16_t loops = 0;
  std::int16_t eta = 0;
};

/// Per-k tables shared by the transform and asymptotic code. Built lazily, read-only afterwards.
class PkCatalog {
 public:
  inline static constexpr std::size_t kMaxDegree = 4;

  /// Throws SizeLimitError for k > kMaxDegree.
  static const PkCatalog& get(std::size_t k);

  std::size_t k() const { return k_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Partition>& basis() const { return basis_; }
  const Partition& at(std::size_t i) const { return basis_[i]; }
  std::size_t index_of(const Partition& p) const;
  std::size_t identity_index() const { return identity_; }
  std::size_t transpose_index(std::size_t i) const { return transpose_[i]; }
  /// 2 d(id_k, p).
  std::int64_t doubled_height(std::size_t i) const { return height_[i]; }
  /// nc(p) - nc(p v id_k).
  std::int64_t normalization_exponent(std::size_t i) const { return norm_exp_[i]; }
  /// Indices in increasing height order; a linear extension of all three orders below.
  const std::vector<std::uint32_t>& by_height() const { return by_height_; }

  const ProductEntry& product(std::size_t i, std::size_t j) const;

  /// Indices q with q <= p, q finer-compatible with p, q coarser-compatible with p (base id_k).
  const std::vector<std::uint32_t>& geodesic_below(std::size_t i) const;
  const std::vector<std::uint32_t>& finer_below(std::size_t i) const;
  const std::vector<std::uint32_t>& coarser_below(std::size_t i) const;

 private:
  explicit PkCatalog(std::size_t k);
  void build_products() const;
  void build_orders() const;

  std::size_t k_;
  std::vector<Partition> basis_;
  std::unordered_map<Partition, std::size_t> index_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> transpose_;
  std::vector<std::int64_t> height_, norm_exp_;
  std::vector<std::uint32_t> by_height_;

  mutable std::once_flag products_once_, orders_once_;
  mutable std::vector<ProductEntry> products_;
  mutable std::vector<std::vector<std::uint32_t>> geodesic_, finer_, coarser_;
};

}  // namespace pfc
