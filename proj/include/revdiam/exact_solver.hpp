#pragma once

#include <cstddef>
#include <optional>

#include "revdiam/digraph.hpp"

namespace revdiam {

enum class CostMode { Cardinality, Weight };

struct SolveBudget {
  std::int64_t d = 2;  ///< target diameter, at least 2
  std::int64_t k = 0;  ///< budget on |F| or on w(F), per mode
  CostMode mode = CostMode::Cardinality;
};

struct Solution {
  ReversalSet witness;
  ExtendedDistance achieved_diameter;
  std::int64_t cost = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// |F| or w(F).
std::int64_t reversal_cost(const Digraph& d, const ReversalSet& f, CostMode mode);

/// Total order on witnesses: (cost, cardinality, sorted ids lexicographically).
bool better_witness(const Digraph& d, CostMode mode, const ReversalSet& a, const ReversalSet& b);

enum class SearchStrategy {
  /// Subsets by increasing cardinality, each cardinality in lexicographic order.
  Exhaustive,
  /// Branch only on arcs that can shorten some pair still farther than d.
  Pruned,
};

struct SolverOptions {
  SearchStrategy strategy = SearchStrategy::Pruned;
  unsigned threads = 1;
};

/**
 * Minimum-cost reversal set with cost <= k reaching diameter <= d, or nullopt.
 *
 * The returned witness is the minimum under better_witness(), so it does not
 * depend on strategy or thread count. Throws DiameterBelowTwo for d < 2.
 */
std::optional<Solution> solve_k_reversals(const Digraph& d, const SolveBudget& budget,
                                          const SolverOptions& options = {});

constexpr std::size_t kDefaultOracleArcCap = 20;

/// Ground truth by exhausting all 2^m reversal subsets, no budget.
/// Throws CapExceeded when m exceeds arc_cap.
std::optional<Solution> oracle_min_reversals(const Digraph& d, std::int64_t target, CostMode mode,
                                             std::size_t arc_cap = kDefaultOracleArcCap);

/// Recomputes the diameter after reversal and checks d and k.
bool verify_solution(const Digraph& d, const SolveBudget& budget, const Solution& s);

}  // namespace revdiam
