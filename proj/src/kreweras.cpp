#include "pfc/kreweras.hpp"

#include "pfc/geometry.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>

namespace pfc {

HalfInt eta(const Partition& p, const Partition& q) {
  require_same_degree(p, q);
  const auto c = compose(p, q);
  auto n = [](const Partition& x) { return static_cast<std::int64_t>(x.nc()); };
  const std::int64_t v = n(p) - trace_exponent(p) + n(q) - trace_exponent(q) - n(c.product) +
                         trace_exponent(c.product) - static_cast<std::int64_t>(c.loops);
  return HalfInt::from_int(v);
}

KrewerasSet kreweras_set(const Partition& p, const Partition& q, std::size_t max_ground) {
  require_same_degree(p, q);
  KrewerasSet out{p, q, {}};
  for (auto& r : enumerate_partitions(p.ground(), max_ground)) {
    if (compose(q, r).product != p) continue;
    if (eta(q, r) == HalfInt{}) out.complements.push_back(r);
  }
  return out;
}

bool prefix_leq(const Partition& q, const Partition& p, std::size_t max_ground) {
  return !kreweras_set(p, q, max_ground).complements.empty();
}

const PkCatalog& PkCatalog::get(std::size_t k) {
  if (k > kMaxDegree) throw SizeLimitError("catalog limited to k <= " + std::to_string(kMaxDegree));
  static std::array<std::unique_ptr<PkCatalog>, kMaxDegree + 1> cache;
  static std::array<std::once_flag, kMaxDegree + 1> once;
  std::call_once(once[k], [k] { cache[k].reset(new PkCatalog(k)); });
  return *cache[k];
}

PkCatalog::PkCatalog(std::size_t k) : k_(k), basis_(enumerate_partitions(GroundSet{2 * k})) {
  const auto id = make_identity(k);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  identity_ = index_.at(id);
  for (const auto& p : basis_) {
    transpose_.push_back(index_.at(transpose(p)));
    height_.push_back(distance(id, p).doubled());
    norm_exp_.push_back(static_cast<std::int64_t>(p.nc()) - trace_exponent(p));
  }
  by_height_.resize(basis_.size());
  std::iota(by_height_.begin(), by_height_.end(), 0u);
  std::stable_sort(by_height_.begin(), by_height_.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return height_[a] < height_[b]; });
}

std::size_t PkCatalog::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw OperandMismatch("partition is not in P_" + std::to_string(k_));
  return it->second;
}

void PkCatalog::build_products() const {
  std::call_once(products_once_, [this] {
    const std::size_t n = basis_.size();
    products_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto c = compose(basis_[i], basis_[j]);
        auto& e = products_[i * n + j];
        e.product = static_cast<std::uint32_t>(index_.at(c.product));
        e.loops = static_cast<std::uint16_t>(c.loops);
        const auto pe = index_.at(c.product);
        e.eta = static_cast<std::int16_t>(norm_exp_[i] + norm_exp_[j] - norm_exp_[pe] -
                                          static_cast<std::int64_t>(c.loops));
      }
  });
}

const ProductEntry& PkCatalog::product(std::size_t i, std::size_t j) const {
  build_products();
  return products_[i * basis_.size() + j];
}

void PkCatalog::build_orders() const {
  std::call_once(orders_once_, [this] {
    const auto id = make_identity(k_);
    const std::size_t n = basis_.size();
    geodesic_.resize(n);
    finer_.resize(n);
    coarser_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& p = basis_[i];
        const auto& q = basis_[j];
        if (in_order(OrderKind::Geodesic, id, q, p)) geodesic_[i].push_back(static_cast<std::uint32_t>(j));
        if (in_order(OrderKind::FinerCompatible, id, q, p)) finer_[i].push_back(static_cast<std::uint32_t>(j));
        if (in_order(OrderKind::CoarserCompatible, id, q, p)) coarser_[i].push_back(static_cast<std::uint32_t>(j));
      }
  });
}

const std::vector<std::uint32_t>& PkCatalog::geodesic_below(std::size_t i) const {
  build_orders();
  return geodesic_[i];
}

const std::vector<std::uint32_t>& PkCatalog::finer_below(std::size_t i) const {
  build_orders();
  return finer_[i];
}

const std::vector<std::uint32_t>& PkCatalog::coarser_below(std::size_t i) const {
  build_orders();
  return coarser_[i];
}

}  // namespace pfc
