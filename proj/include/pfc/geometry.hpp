#pragma once

#include "pfc/matrix.hpp"
#include "pfc/partition.hpp"
#include "pfc/rational.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace pfc {

enum class OrderKind { Geodesic, CoarserCompatible, FinerCompatible, Refinement };

std::string_view to_string(OrderKind kind);
/// Accepts "geodesic", "coarser", "finer", "refinement" (and G, C, S, F).
OrderKind parse_order_kind(std::string_view text);

/// d(p,q) = (nc p + nc q)/2 - nc(p v q).
HalfInt distance(const Partition& p, const Partition& q);

/// d(b,q) + d(q,p) - d(b,p).
HalfInt defect(const Partition& b, const Partition& q, const Partition& p);

/// Whether q precedes p in the order of the given kind with base b.
bool in_order(OrderKind kind, const Partition& b, const Partition& q, const Partition& p);

/// All q with d(p1,q) + d(q,p2) = d(p1,p2), in enumeration order.
std::vector<Partition> segment(const Partition& p1, const Partition& p2, std::size_t max_ground = kDefaultMaxGround);

/// Blocks of p admitting a cut in two that raises nc(. v b) by one.
std::vector<Partition::Block> pivotal_blocks(const Partition& b, const Partition& p);

/// One cut of a pivotal block, every way it can be done; sorted, no duplicates.
std::vector<Partition> split_step(const Partition& b, const Partition& p);

/// Reflexive-transitive closure of split_step, sorted.
std::vector<Partition> admissible_splits(const Partition& b, const Partition& p);

/// Coarsenings q of p with nc(q v b) = nc(p v b), sorted.
std::vector<Partition> admissible_gluings(const Partition& b, const Partition& p,
                                          std::size_t max_blocks = kDefaultMaxGround);

struct OrderMatrix {
  OrderKind kind = OrderKind::Geodesic;
  Partition base;
  std::vector<Partition> basis;
  /// entries(i, j) = 1 iff basis[j] precedes basis[i].
  RationalMatrix entries;
};

OrderMatrix order_matrix(OrderKind kind, const Partition& b, GroundSet ground,
                         std::size_t max_ground = kDefaultMaxGround);

/// Moebius function of refinement; zero unless p1 is finer than p2.
Rational refinement_mobius(const Partition& p1, const Partition& p2);

/// Closed-form Moebius function mu(p1, p2) of the order; equals M^{-1}(p2, p1).
Rational mobius(OrderKind kind, const Partition& b, const Partition& p1, const Partition& p2);

struct HasseDiagram {
  std::vector<Partition> basis;
  /// (lower, upper) basis indices of each cover, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

HasseDiagram hasse_diagram(OrderKind kind, const Partition& b, GroundSet ground,
                           std::size_t max_ground = kDefaultMaxGround);

inline constexpr std::size_t kBfsMaxGround = 6;

/// Half the length of a shortest path of single gluings/cuts from p to q.
HalfInt bfs_distance_oracle(const Partition& p, const Partition& q);

}  // namespace pfc
