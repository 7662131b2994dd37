#pragma once

// Independent reference implementations used as oracles by the tests. None of
// them calls into the solver, distance or volume code under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "revdiam/digraph.hpp"

namespace revdiam::testing {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

/// Floyd-Warshall all pairs, kInf for unreachable.
inline std::vector<std::vector<std::int64_t>> floyd(const Digraph& d) {
  const auto n = static_cast<std::size_t>(d.vertex_count());
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) dist[v][v] = 0;
  for (const Arc& a : d.arcs()) {
    auto& cell = dist[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(a.head)];
    cell = std::min(cell, a.weight);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (dist[i][k] < kInf && dist[k][j] < kInf) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  return dist;
}

inline std::int64_t floyd_diameter(const Digraph& d) {
  std::int64_t best = 0;
  for (const auto& row : floyd(d))
    for (std::int64_t x : row) best = std::max(best, x);
  return best;
}

inline ExtendedDistance as_extended(std::int64_t x) {
  return x >= kInf ? ExtendedDistance::infinite() : ExtendedDistance::finite(x);
}

struct BruteAnswer {
  std::int64_t cost = 0;
  std::vector<ArcId> witness;
};

/// Every subset, ordered by (cost, cardinality, sorted ids).
inline std::optional<BruteAnswer> brute_min_reversals(const Digraph& d, std::int64_t target, bool weighted) {
  const auto m = static_cast<std::size_t>(d.arc_count());
  std::optional<BruteAnswer> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Digraph g = d;
    BruteAnswer cand;
    for (std::size_t a = 0; a < m; ++a) {
      if (!(mask >> a & 1)) continue;
      g.reverse_arc(static_cast<ArcId>(a));
      cand.witness.push_back(static_cast<ArcId>(a));
      cand.cost += weighted ? d.arc(static_cast<ArcId>(a)).weight : 1;
    }
    if (floyd_diameter(g) > target) continue;
    const auto key = [](const BruteAnswer& b) { return std::tuple(b.cost, b.witness.size(), b.witness); };
    if (!best || key(cand) < key(*best)) best = cand;
  }
  return best;
}

inline Digraph random_digraph(std::mt19937_64& rng, VertexId n, std::size_t m, Weight max_weight = 1) {
  Digraph d(n);
  std::uniform_int_distribution<VertexId> vertex(0, n - 1);
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  while (static_cast<std::size_t>(d.arc_count()) < m) {
    const VertexId a = vertex(rng), b = vertex(rng);
    if (a != b) d.add_arc(a, b, weight(rng));
  }
  return d;
}

/// Bridgeless cactus: cycles of length 2..max_len glued at random existing
/// vertices, random arc directions, then vertex labels and arc order shuffled.
inline Digraph random_cactus(std::mt19937_64& rng, std::size_t cycles, std::size_t max_arcs, int max_len = 5,
                             Weight max_weight = 1) {
  std::vector<Arc> arcs;
  VertexId n = 1;
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t c = 0; c < cycles; ++c) {
    const auto room = static_cast<int>(max_arcs - arcs.size());
    if (room < 2) break;
    const int len = std::uniform_int_distribution<int>(2, std::min(max_len, room))(rng);
    const VertexId anchor = std::uniform_int_distribution<VertexId>(0, n - 1)(rng);
    std::vector<VertexId> ring{anchor};
    for (int i = 1; i < len; ++i) ring.push_back(n++);
    for (int i = 0; i < len; ++i) {
      VertexId a = ring[static_cast<std::size_t>(i)], b = ring[static_cast<std::size_t>((i + 1) % len)];
      if (coin(rng)) std::swap(a, b);
      arcs.push_back({a, b, weight(rng)});
    }
  }
  std::vector<VertexId> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::shuffle(arcs.begin(), arcs.end(), rng);
  for (Arc& a : arcs) {
    a.tail = label[static_cast<std::size_t>(a.tail)];
    a.head = label[static_cast<std::size_t>(a.head)];
  }
  return Digraph(n, std::move(arcs));
}

/// Does some set of at most ell vertices dominate the graph?
inline bool has_dominating_set(int n, const std::vector<std::pair<int, int>>& edges, std::int64_t ell) {
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = 1u << v;
  for (auto [a, b] : edges) {
    closed[static_cast<std::size_t>(a)] |= 1u << b;
    closed[static_cast<std::size_t>(b)] |= 1u << a;
  }
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (std::popcount(s) > ell) continue;
    std::uint32_t covered = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) covered |= closed[static_cast<std::size_t>(v)];
    if (covered == all) return true;
  }
  return false;
}

inline bool has_subset_sum(const std::vector<std::int64_t>& values, std::int64_t target) {
  std::set<std::int64_t> reach{0};
  for (std::int64_t v : values) {
    std::set<std::int64_t> next = reach;
    for (std::int64_t r : reach) next.insert(r + v);
    reach = std::move(next);
  }
  return reach.count(target) > 0;
}

/// Distinct sums of t lattice points of P: the generators e_head - e_tail,
/// plus the origin when some directed cycle passes through it.
inline std::size_t count_t_fold_sums(const Digraph& d, int t) {
  const auto n = static_cast<std::size_t>(d.vertex_count());
  std::vector<std::vector<std::int64_t>> pieces;
  for (const Arc& a : d.arcs()) {
    std::vector<std::int64_t> p(n, 0);
    ++p[static_cast<std::size_t>(a.head)];
    --p[static_cast<std::size_t>(a.tail)];
    pieces.push_back(std::move(p));
  }
  const auto dist = floyd(d);
  for (const Arc& a : d.arcs())
    if (dist[static_cast<std::size_t>(a.head)][static_cast<std::size_t>(a.tail)] < kInf) {
      pieces.emplace_back(n, 0);
      break;
    }
  std::set<std::vector<std::int64_t>> layer{std::vector<std::int64_t>(n, 0)};
  for (int step = 0; step < t; ++step) {
    std::set<std::vector<std::int64_t>> next;
    for (const auto& p : layer)
      for (const auto& g : pieces) {
        auto q = p;
        for (std::size_t i = 0; i < n; ++i) q[i] += g[i];
        next.insert(std::move(q));
      }
    layer = std::move(next);
  }
  return layer.size();
}

/// All simple graphs on n <= 4 vertices as edge lists (every labeling).
inline std::vector<std::vector<std::pair<int, int>>> all_simple_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) e.push_back(slots[s]);
    out.push_back(std::move(e));
  }
  return out;
}

/// One representative per isomorphism class, smallest edge mask under relabeling.
inline std::vector<std::vector<std::pair<int, int>>> isomorphism_classes(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const auto slot_of = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::pair{a, b}) - slots.begin());
  };
  std::set<std::uint32_t> canon;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = mask;
    do {
      std::uint32_t m = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1)
          m |= 1u << slot_of(perm[static_cast<std::size_t>(slots[s].first)], perm[static_cast<std::size_t>(slots[s].second)]);
      best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t mask : canon) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) e.push_back(slots[s]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace revdiam::testing
