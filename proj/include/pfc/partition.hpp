#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfc {

/// Largest ground set that enumerate_partitions accepts unless told otherwise.
inline constexpr std::size_t kDefaultMaxGround = 12;

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different ground sets (or different k for P_k).
class OperandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroundSet {
  std::size_t size = 0;
};

/// Set partition of {0..n-1}, stored as its restricted growth string:
/// label(i) is the rank of i's block when blocks are ordered by least element.
class Partition {
 public:
  using Block = std::vector<std::size_t>;

  Partition() = default;

  /// Any labelling; equal labels mean same block. Canonicalized.
  static Partition from_labels(std::span<const int> labels);
  /// Throws ParseError on repeated or missing elements.
  static Partition from_blocks(std::size_t n, const std::vector<Block>& blocks);
  static Partition singletons(std::size_t n);
  static Partition one_block(std::size_t n);

  std::size_t size() const { return label_.size(); }
  GroundSet ground() const { return {label_.size()}; }
  std::size_t nc() const { return nc_; }
  std::size_t label(std::size_t i) const { return label_[i]; }
  const std::vector<std::uint8_t>& labels() const { return label_; }
  std::vector<Block> blocks() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the growth string: the enumeration order.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.label_ <=> b.label_;
  }

 private:
  std::vector<std::uint8_t> label_;
  std::size_t nc_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

inline std::size_t nc(const Partition& p) { return p.nc(); }

Partition join(const Partition& p, const Partition& q);
Partition meet(const Partition& p, const Partition& q);
bool is_finer(const Partition& p, const Partition& q);

/// Throws SizeLimitError when n > max_ground.
std::vector<Partition> enumerate_partitions(GroundSet ground, std::size_t max_ground = kDefaultMaxGround);

/// Bell numbers via the Bell triangle.
std::uint64_t bell_number(std::size_t n);

/// Blocks as 1-based indices: "1 2 | 3".
std::string format_plain(const Partition& p);

void require_same_ground(const Partition& p, const Partition& q);

}  // namespace pfc

template <>
struct std::hash<pfc::Partition> {
  std::size_t operator()(const pfc::Partition& p) const noexcept { return pfc::PartitionHash{}(p); }
};
