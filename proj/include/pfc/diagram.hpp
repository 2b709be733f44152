#pragma once

#include "pfc/matrix.hpp"
#include "pfc/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfc {

// Partitions of P_k live on 2k elements: column i (0-based) has top element i
// (printed i+1) and bottom element k+i (printed (i+1)').

/// k for a partition of P_k. Throws OperandMismatch on odd ground size.
std::size_t degree(const Partition& p);
void require_same_degree(const Partition& p, const Partition& q);

/// Parses "1 1' | 2' | 2 3' 5' | 3 4 4' | 5"; "" or "∅" for k = 0.
Partition parse_pk(std::string_view text, std::size_t k);
std::string format_pk(const Partition& p);

struct ComposeResult {
  Partition product;
  std::size_t loops = 0;
};

/// p o q: q stacked on top of p; closed middle components are removed and counted.
ComposeResult compose(const Partition& p, const Partition& q);
/// p on the left, q on the right.
Partition tensor(const Partition& p, const Partition& q);
Partition transpose(const Partition& p);

/// Restriction to the columns touched by `elements` (any indices in 0..2k-1), relabelled in order.
Partition extract(const Partition& p, const std::vector<std::size_t>& elements);
Partition extract_columns(const Partition& p, const std::vector<std::size_t>& columns);

struct DiagramStructure {
  /// Column sets of the blocks of p v id_k, ordered by least column.
  std::vector<std::vector<std::size_t>> cycles;
  /// Columns i such that {i, i'} is not a block.
  std::vector<std::size_t> support;
  bool irreducible = false;
  bool weakly_irreducible = false;
  bool exclusive_irreducible = false;
  std::optional<std::vector<std::size_t>> exclusive_support;
};

DiagramStructure structure(const Partition& p);

Partition make_identity(std::size_t k);
/// Single block 0_k.
Partition make_zero(std::size_t k);
/// sigma[i] = image of column i, 0-based.
Partition make_permutation(const std::vector<std::size_t>& sigma);
/// Transposition (i,j), 1-based.
Partition make_transposition(std::size_t k, std::size_t i, std::size_t j);
/// Weyl contraction [i,j], 1-based.
Partition make_contraction(std::size_t k, std::size_t i, std::size_t j);
/// The cycle i -> i+1, k -> 1.
Partition make_cycle(std::size_t k);
/// (1,k+1)(2,k+2)...(k,2k) in P_{2k}.
Partition make_tau(std::size_t k);

std::optional<std::vector<std::size_t>> to_permutation(const Partition& p);
int permutation_sign(const std::vector<std::size_t>& sigma);
std::vector<std::vector<std::size_t>> all_permutations(std::size_t k);

enum class Family { Permutations, Brauer, AtMostPairs, EvenBlocks, CoarserThanId, All };

/// "P", "S", "B", "Bs", "H", "D".
Family parse_family(std::string_view text);
std::string_view to_string(Family f);
bool family_contains(Family f, const Partition& p);
std::vector<Partition> family_members(Family f, std::size_t k, std::size_t max_ground = kDefaultMaxGround);

/// nc(p v id_k): Tr rho_N(p) = N^this.
std::int64_t trace_exponent(const Partition& p);
/// nc(p v q): Tr rho_N(p) rho_N(q)^T = N^this.
std::int64_t pair_trace_exponent(const Partition& p, const Partition& q);

inline constexpr std::size_t kMaxRhoDim = 4096;

/// Rows indexed by bottom tuples, columns by top tuples, tuples in lexicographic order.
IntMatrix rho(const Partition& p, std::size_t n);
/// Same with the strict delta: equal indices exactly on common blocks.
IntMatrix rho_exclusive(const Partition& p, std::size_t n);

/// Coefficients of p^c = sum over coarsenings p' of mu_f(p, p') p'.
std::vector<std::pair<Partition, std::int64_t>> exclusive_coeffs(const Partition& p,
                                                                 std::size_t max_blocks = kDefaultMaxGround);

/// The element of admissible_splits(id_k, p) in the family, if any. Family must be S or B.
std::optional<Partition> mb(const Partition& p, Family f);

}  // namespace pfc
