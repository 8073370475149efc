// Exact minimum-size searches for resolving, semi-resolving and double
// blocking sets.
//
// Every problem is phrased as a covering system over a universe of
// elements: constraint i asks for at least demand[i] chosen elements among
// candidates[i]. For resolving sets the universe is points 0..n-1 followed
// by lines n..2n-1 and each constraint is a pair of same-kind vertices
// (point/line pairs are separated by any nonempty set). For point kinds the
// universe is the point set.
//
// Feasibility of a fixed size k is decided either by exhaustive colex
// enumeration of k-subsets (restartable through a JSON checkpoint) or by
// branch and bound. Both exist as a serial reference kernel and an OpenMP
// kernel with identical results.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgres/resolve.hpp"

namespace pgres {

enum class SearchKind { Resolving, SemiResolving, DoubleBlocking };
enum class ProofMode { Exhaustive, BranchAndBound, UpperBoundOnly };
enum class SearchMethod { Auto, Exhaustive, BranchAndBound };

const char* to_string(SearchKind kind);
const char* to_string(ProofMode mode);
SearchKind parse_search_kind(const std::string& s);

struct ConstraintSystem {
  SearchKind kind = SearchKind::Resolving;
  std::uint32_t q = 0;
  std::uint32_t plane_size = 0;  // n
  std::uint32_t universe = 0;    // 2n for resolving, n otherwise
  std::vector<std::vector<std::uint32_t>> candidates;
  std::vector<std::uint32_t> demand;

  /// Whether the given elements satisfy every constraint.
  bool satisfied_by(std::span<const std::uint32_t> elements) const;
  MixedSet to_set(std::span<const std::uint32_t> elements) const;
  std::vector<std::uint32_t> to_elements(const MixedSet& s) const;
};

ConstraintSystem build_constraints(const Plane& plane, SearchKind kind);

/// The group generated by the Singer cycle and the Frobenius map of
/// GF(q^3), as permutations of the search universe (order n * 3h).
std::vector<Permutation> symmetry_group(const Plane& plane, SearchKind kind);

struct SearchOptions {
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  bool symmetry = true;
  bool parallel = true;
  SearchMethod method = SearchMethod::Auto;
  /// Cursor file for exhaustive phases.
  std::optional<std::string> checkpoint;
};

/// Auto picks exhaustive enumeration when C(universe, k) is at most this.
inline constexpr std::uint64_t kExhaustiveLimit = 50'000'000;

enum class Decision { Feasible, Infeasible, BudgetExceeded };

struct DecideResult {
  Decision decision = Decision::Infeasible;
  std::vector<std::uint32_t> witness;  // universe elements, ascending
  std::uint64_t nodes = 0;
  ProofMode mode = ProofMode::Exhaustive;
};

/// Is there a feasible set of exactly k elements? Symmetry reduction needs
/// `group` (may be empty).
DecideResult decide(const ConstraintSystem& sys, std::uint32_t k, const SearchOptions& opts,
                    const std::vector<Permutation>& group = {});

/// Kernels, exposed for testing and benchmarking. Ranks refer to the colex
/// order of k-subsets; the range is [first, last).
DecideResult exhaustive_serial(const ConstraintSystem& sys, std::uint32_t k, std::uint64_t first,
                               std::uint64_t last);
DecideResult exhaustive_parallel(const ConstraintSystem& sys, std::uint32_t k, std::uint64_t first,
                                 std::uint64_t last);
DecideResult branch_and_bound_serial(const ConstraintSystem& sys, std::uint32_t k,
                                     const std::vector<Permutation>& group);
DecideResult branch_and_bound_parallel(const ConstraintSystem& sys, std::uint32_t k,
                                       const std::vector<Permutation>& group);

/// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t colex_rank(std::span<const std::uint32_t> combination);
std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t k);

struct SearchResult {
  SearchKind kind = SearchKind::Resolving;
  std::uint32_t q = 0;
  std::uint32_t optimum = 0;  // best size found; exact unless upper_bound_only
  MixedSet witness;
  std::uint64_t nodes_explored = 0;
  ProofMode proof_mode = ProofMode::Exhaustive;
  bool budget_exceeded = false;
};

SearchResult min_resolving(const Plane& plane, const SearchOptions& opts = {});
SearchResult min_semi_resolving(const Plane& plane, const SearchOptions& opts = {});
SearchResult min_double_blocking(const Plane& plane, const SearchOptions& opts = {});
SearchResult min_search(const Plane& plane, SearchKind kind, const SearchOptions& opts = {});

/// Smallest known set of the kind, used as the starting upper bound.
MixedSet known_upper_bound(const Plane& plane, SearchKind kind);

struct NoSmallerCertificate {
  bool holds = false;  // no feasible set of size k exists
  std::optional<MixedSet> witness;
  std::uint64_t nodes = 0;
};

/// Exhaustive refutation of size k. Throws BudgetExceeded (after saving the
/// checkpoint, if any).
NoSmallerCertificate verify_no_smaller(const Plane& plane, std::uint32_t k, SearchKind kind,
                                       const SearchOptions& opts = {});

/// Re-verifies through the resolve module.
bool verify_kind(const MixedSet& s, SearchKind kind, const Plane& plane);

}  // namespace pgres
