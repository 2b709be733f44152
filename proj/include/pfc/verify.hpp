#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfc::verify {

/// Outcome of a batch of checks. Only the first few failures are kept verbatim.
struct Report {
  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;

  static constexpr std::size_t kKeptFailures = 20;

  bool passed() const { return failure_count == 0; }
  /// Counts one check; `describe` runs only on failure.
  void check(bool ok, const std::function<std::string()>& describe);
  void merge(const Report& other);
};

/// Runs body(i, report) for i < count on `jobs` threads; per-item reports are merged in index order.
Report parallel_checks(std::string name, std::size_t count, std::size_t jobs,
                       const std::function<void(std::size_t, Report&)>& body);

// Each check is exhaustive unless a sample count is given.

/// Closed-form distance against shortest gluing paths, all ground sizes <= max_ground.
Report distance_vs_bfs(std::size_t max_ground, std::size_t jobs = 1);
/// Identity, symmetry and triangle inequality; samples = 0 means all triples.
Report metric_axioms(std::size_t ground, std::uint64_t seed, std::size_t samples, std::size_t jobs = 1);
/// Geodesic order matrix equals the coarser-compatible times the finer-compatible matrix, every base.
Report order_factorization(std::size_t ground, std::size_t jobs = 1);
/// Closed-form Moebius functions equal the inverse order matrices, every base and kind,
/// plus the refinement value 2 on three points.
Report mobius_closed_form(std::size_t ground, std::size_t jobs = 1);
/// Geodesic covers are the union of the two compatible orders' covers and raise the distance.
Report hasse_covers(std::size_t ground, std::size_t jobs = 1);
/// Matrix traces of rho and rho-exclusive against the exponent formulas, k <= max_k.
Report trace_identities(std::size_t max_k, const std::vector<std::size_t>& sizes);
/// rho(p) is the sum of the exclusive matrices of its coarsenings, and conversely via exclusive_coeffs.
Report exclusive_expansion(std::size_t max_k, std::size_t max_n);
/// Alternating sum over S_k in dimension k - 1 vanishes.
Report mandelstam(const std::vector<std::size_t>& ks);
/// The images of P_k under rho_N are linearly independent.
Report rho_injectivity(std::size_t k, std::size_t n);
/// Permutations below the long cycle: Catalan counts up to max_count_k, noncrossing order
/// isomorphism up to max_iso_k.
Report noncrossing_embedding(std::size_t max_count_k, std::size_t max_iso_k);
/// Partitions coarser than id_k with the geodesic order match the partition lattice of k points.
Report coarser_than_identity(std::size_t max_k);
Report eta_nonnegative(std::size_t k, std::size_t jobs = 1);
/// The worked complement example on P_2.
Report kreweras_example();
/// Complements below the long cycle equal the classical noncrossing complement.
Report kreweras_classical(std::size_t max_k);
/// Four expressions of df(p1 o p2, p0) + eta(p1, p2) agree on P_k^3.
Report defect_sum_identities(std::size_t k, std::size_t jobs = 1);
/// Four characterizations of eta = 0 with a bounded product agree on P_k^3.
Report kreweras_characterization(std::size_t k, std::size_t jobs = 1);
/// Limit product associative on P_k^3 and equal to the limit of the deformed product.
Report limit_associativity(std::size_t k, std::size_t jobs = 1);
/// Composed exclusive transforms equal the moment transform on every delta, k <= max_k.
Report transform_identity(std::size_t max_k);
/// Stability of characters, infinitesimal characters through the transforms, exponentials,
/// and the free cumulant bridge.
Report characters(std::uint64_t seed, std::size_t count, std::size_t t_order);
/// Limit moment/cumulant relations, the transposed-composition identity and product formulas
/// on every normalized basis element and `random_count` random elements.
Report convergence(std::size_t max_k, std::uint64_t seed, std::size_t random_count, std::size_t jobs = 1);
Report semigroups(std::size_t k, std::uint64_t seed, std::size_t pairs, std::size_t t_order);
Report fluctuations(std::size_t max_k, std::size_t max_n, std::uint64_t seed, std::size_t trials);

struct Options {
  std::size_t k = 2;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t t_order = 3;
  std::size_t n = 2;
};

const std::vector<std::string>& suite_names();
/// Runs a named suite; "all" expands to every suite. Throws std::invalid_argument on unknown names.
std::vector<Report> run(std::string_view suite, const Options& options);

}  // namespace pfc::verify
