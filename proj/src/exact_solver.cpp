#include "revdiam/exact_solver.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <thread>

#include "revdiam/distance.hpp"
#include "revdiam/error.hpp"

namespace revdiam {

namespace {

std::int64_t arc_cost(const Digraph& d, ArcId id, CostMode mode) {
  return mode == CostMode::Cardinality ? 1 : d.arc(id).weight;
}

// Candidate minimum under the witness order; `cost` caches reversal_cost.
struct Best {
  std::optional<ReversalSet> set;
  std::int64_t cost = 0;

  bool improves(std::int64_t c, const std::vector<ArcId>& ids) const {
    if (!set) return true;
    if (c != cost) return c < cost;
    if (ids.size() != set->cardinality()) return ids.size() < set->cardinality();
    return std::lexicographical_compare(ids.begin(), ids.end(), set->ids().begin(), set->ids().end());
  }

  // Can a set of this cost and size, or a superset of it, still win?
  bool reachable(std::int64_t c, std::size_t size) const {
    if (!set) return true;
    if (c != cost) return c < cost;
    return size <= set->cardinality();
  }

  void offer(std::int64_t c, const std::vector<ArcId>& ids) {
    if (improves(c, ids)) {
      set = ReversalSet(ids);
      cost = c;
    }
  }

  void merge(const Best& other) {
    if (other.set) offer(other.cost, std::vector<ArcId>(other.set->ids().begin(), other.set->ids().end()));
  }
};

Digraph flipped(const Digraph& d, const std::vector<ArcId>& ids) {
  Digraph out = d;
  for (ArcId id : ids) out.reverse_arc(id);
  return out;
}

unsigned worker_count(unsigned requested) { return std::max(1u, requested); }

template <typename Work>
Best run_workers(unsigned threads, Work&& work) {
  std::vector<Best> local(threads);
  if (threads == 1) {
    work(0u, local[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back([&, w] { work(w, local[w]); });
  }
  Best best;
  for (const Best& b : local) best.merge(b);
  return best;
}

// Visits every size-`size` subset of [0, m) in lexicographic order.
template <typename Visit>
void for_each_combination(std::size_t m, std::size_t size, Visit&& visit) {
  if (size > m) return;
  std::vector<ArcId> comb(size);
  for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<ArcId>(i);
  while (true) {
    visit(comb);
    std::size_t i = size;
    while (i > 0 && comb[i - 1] == static_cast<ArcId>(m - size + i - 1)) --i;
    if (i == 0) return;
    ++comb[i - 1];
    for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
  }
}

Best exhaustive(const Digraph& d, const SolveBudget& budget, unsigned threads) {
  const auto m = static_cast<std::size_t>(d.arc_count());
  std::vector<std::int64_t> sorted_costs;
  for (ArcId id = 0; id < d.arc_count(); ++id) sorted_costs.push_back(arc_cost(d, id, budget.mode));
  std::sort(sorted_costs.begin(), sorted_costs.end());

  Best best;
  std::int64_t cheapest = 0;  // least cost of any subset of the current size
  for (std::size_t size = 0; size <= m; ++size) {
    if (size > 0) cheapest += sorted_costs[size - 1];
    if (cheapest > budget.k) break;
    if (best.set && cheapest >= best.cost) break;
    Best layer = run_workers(threads, [&](unsigned w, Best& local) {
      std::size_t index = 0;
      for_each_combination(m, size, [&](const std::vector<ArcId>& comb) {
        if (index++ % threads != w) return;
        std::int64_t c = 0;
        for (ArcId id : comb) c += arc_cost(d, id, budget.mode);
        if (c > budget.k || !local.improves(c, comb)) return;
        if (diameter_at_most(flipped(d, comb), budget.d)) local.offer(c, comb);
      });
    });
    best.merge(layer);
    if (best.set && budget.mode == CostMode::Cardinality) break;
  }
  return best;
}

// Depth-first search over reversal sets. At each infeasible node some pair
// (u, v) is still farther than d; every feasible superset must reverse an arc
// (a, b) that lies, traversed as b -> a, on a u-v route of length <= d in the
// underlying undirected graph. Branching only on those arcs keeps every
// feasible superset reachable, so the search is exact.
class PrunedSearch {
 public:
  PrunedSearch(const Digraph& d, const SolveBudget& budget)
      : d_(d), budget_(budget), undirected_(undirected_distances(d)) {}

  // Branches available at the root, in id order; empty when the root is feasible.
  std::vector<ArcId> root_children(Best& best) {
    std::vector<ArcId> root;
    return expand(root, 0, best);
  }

  void run(std::vector<ArcId> set, std::int64_t cost, Best& best) {
    if (!best.reachable(cost, set.size())) return;
    if (!seen_.insert(set).second) return;
    for (ArcId id : expand(set, cost, best)) {
      std::vector<ArcId> child = set;
      child.insert(std::upper_bound(child.begin(), child.end(), id), id);
      run(std::move(child), cost + arc_cost(d_, id, budget_.mode), best);
    }
  }

 private:
  // Records `set` if feasible; otherwise returns the arcs worth adding.
  std::vector<ArcId> expand(const std::vector<ArcId>& set, std::int64_t cost, Best& best) {
    const Digraph current = flipped(d_, set);
    const DistanceMatrix dist = all_pairs_distances(current);
    const VertexId n = d_.vertex_count();

    std::vector<std::pair<VertexId, VertexId>> far;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        if (u != v && !dist.at(u, v).at_most(budget_.d)) far.emplace_back(u, v);
    if (far.empty()) {
      best.offer(cost, set);
      return {};
    }

    std::vector<ArcId> open;
    for (ArcId id = 0; id < d_.arc_count(); ++id) {
      if (std::binary_search(set.begin(), set.end(), id)) continue;
      const std::int64_t c = cost + arc_cost(d_, id, budget_.mode);
      if (c > budget_.k || !best.reachable(c, set.size() + 1)) continue;
      open.push_back(id);
    }

    std::vector<ArcId> chosen;
    bool have = false;
    for (const auto& [u, v] : far) {
      std::vector<ArcId> cands;
      for (ArcId id : open) {
        const Arc& a = current.arc(id);
        const ExtendedDistance route = undirected_.at(u, a.head) + ExtendedDistance(a.weight) + undirected_.at(a.tail, v);
        if (route.at_most(budget_.d)) cands.push_back(id);
      }
      if (!have || cands.size() < chosen.size()) {
        chosen = std::move(cands);
        have = true;
        if (chosen.empty()) break;
      }
    }
    return chosen;
  }

  const Digraph& d_;
  SolveBudget budget_;
  DistanceMatrix undirected_;
  std::set<std::vector<ArcId>> seen_;
};

Best pruned(const Digraph& d, const SolveBudget& budget, unsigned threads) {
  Best root_best;
  std::vector<ArcId> children;
  {
    PrunedSearch probe(d, budget);
    children = probe.root_children(root_best);
  }
  if (root_best.set) return root_best;
  return run_workers(threads, [&](unsigned w, Best& local) {
    PrunedSearch search(d, budget);
    for (std::size_t i = w; i < children.size(); i += threads)
      search.run({children[i]}, arc_cost(d, children[i], budget.mode), local);
  });
}

Solution finish(const Digraph& d, CostMode mode, const ReversalSet& f) {
  return Solution{f, diameter(reverse_arcs(d, f)), reversal_cost(d, f, mode)};
}

}  // namespace

std::int64_t reversal_cost(const Digraph& d, const ReversalSet& f, CostMode mode) {
  f.validate(d);
  return mode == CostMode::Cardinality ? static_cast<std::int64_t>(f.cardinality()) : f.total_weight(d);
}

bool better_witness(const Digraph& d, CostMode mode, const ReversalSet& a, const ReversalSet& b) {
  const auto ca = reversal_cost(d, a, mode);
  const auto cb = reversal_cost(d, b, mode);
  if (ca != cb) return ca < cb;
  if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
  return a < b;
}

std::optional<Solution> solve_k_reversals(const Digraph& d, const SolveBudget& budget, const SolverOptions& options) {
  if (budget.d < 2) throw DiameterBelowTwo();
  if (budget.k < 0) throw InvalidArgument("negative reversal budget");
  const unsigned threads = worker_count(options.threads);
  const Best best = options.strategy == SearchStrategy::Exhaustive ? exhaustive(d, budget, threads)
                                                                   : pruned(d, budget, threads);
  if (!best.set) return std::nullopt;
  return finish(d, budget.mode, *best.set);
}

std::optional<Solution> oracle_min_reversals(const Digraph& d, std::int64_t target, CostMode mode,
                                             std::size_t arc_cap) {
  if (target < 2) throw DiameterBelowTwo();
  const auto m = static_cast<std::size_t>(d.arc_count());
  if (m > arc_cap || m >= 63)
    throw CapExceeded("oracle limited to " + std::to_string(arc_cap) + " arcs, instance has " + std::to_string(m));
  Best best;
  std::vector<ArcId> ids;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ids.clear();
    std::int64_t c = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if (mask >> a & 1) {
        ids.push_back(static_cast<ArcId>(a));
        c += arc_cost(d, static_cast<ArcId>(a), mode);
      }
    }
    if (!best.improves(c, ids)) continue;
    if (diameter(flipped(d, ids)).at_most(target)) best.offer(c, ids);
  }
  if (!best.set) return std::nullopt;
  return finish(d, mode, *best.set);
}

bool verify_solution(const Digraph& d, const SolveBudget& budget, const Solution& s) {
  const ExtendedDistance achieved = diameter(reverse_arcs(d, s.witness));
  return achieved == s.achieved_diameter && achieved.at_most(budget.d) &&
         reversal_cost(d, s.witness, budget.mode) == s.cost && s.cost <= budget.k;
}

}  // namespace revdiam
