#pragma once

#include <optional>
#include <vector>

#include "revdiam/cactus.hpp"
#include "revdiam/exact_solver.hpp"

namespace revdiam {

/// Reversal cost of each cyclic orientation of one cycle.
struct CycleOrientationCost {
  std::int64_t clockwise = 0;  ///< f(C): arcs disagreeing with the stored order
  std::int64_t total = 0;      ///< counterclockwise cost is total - clockwise

  std::int64_t counterclockwise() const { return total - clockwise; }
};

/// One entry per cycle of `tree`, in cycle order. Synthetic cycles cost 0.
std::vector<CycleOrientationCost> cycle_costs(const Digraph& d, const CycleTree& tree,
                                              CostMode mode = CostMode::Cardinality);

struct CactusOptions {
  /// Original vertex the cycle tree is hung from; any choice gives the same optimum.
  VertexId root = 0;
};

/**
 * Exact (Weighted) k-Reversals on a cactus by dynamic programming over the
 * rooted cycle tree.
 *
 * The witness has minimum cost but need not be the lexicographically first
 * one; solve_k_reversals gives that.
 * Returns nullopt when infeasible, including every graph with a bridge.
 * Throws NotCactus for non-cactus input and DiameterBelowTwo for d < 2.
 */
std::optional<Solution> solve_cactus(const Digraph& d, std::int64_t target, std::int64_t budget,
                                     CostMode mode, const CactusOptions& options = {});

}  // namespace revdiam
