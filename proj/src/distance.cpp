#include "revdiam/distance.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "revdiam/error.hpp"
#include "revdiam/kernels.hpp"

namespace revdiam {

namespace {

using kernels::Word;

void check_vertex(const Digraph& d, VertexId v) {
  if (v < 0 || v >= d.vertex_count()) throw InvalidArgument("vertex id out of range: " + std::to_string(v));
}

// Out-neighbourhood of every vertex as a bit row.
class BitAdjacency {
 public:
  BitAdjacency(const Digraph& d, bool transpose = false, bool symmetric = false)
      : n_(static_cast<std::size_t>(d.vertex_count())),
        words_(kernels::words_for(n_)),
        rows_(n_ * words_, 0) {
    for (const Arc& a : d.arcs()) {
      const VertexId from = transpose ? a.head : a.tail;
      const VertexId to = transpose ? a.tail : a.head;
      set(from, to);
      if (symmetric) set(to, from);
    }
  }

  std::size_t words() const { return words_; }
  const Word* row(std::size_t v) const { return rows_.data() + v * words_; }

 private:
  void set(VertexId from, VertexId to) {
    rows_[static_cast<std::size_t>(from) * words_ + static_cast<std::size_t>(to) / 64] |=
        Word{1} << (static_cast<std::size_t>(to) % 64);
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Word> rows_;
};

template <typename Visit>
void for_each_bit(const std::vector<Word>& bits, Visit&& visit) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    Word x = bits[w];
    while (x) {
      visit(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

// Level-synchronous BFS from `source`. `on_level(level, frontier)` sees each
// new frontier; returning false stops the search. Returns the number of
// vertices reached and the last level that reached something.
struct BfsOutcome {
  std::size_t reached = 0;
  std::int64_t eccentricity = 0;
};

template <typename OnLevel>
BfsOutcome bit_bfs(const BitAdjacency& adj, std::size_t source, std::int64_t max_level, OnLevel&& on_level) {
  const kernels::BitsetOps& ops = kernels::active();
  const std::size_t words = adj.words();
  std::vector<Word> visited(words, 0), frontier(words, 0), next(words, 0);
  visited[source / 64] |= Word{1} << (source % 64);
  frontier = visited;
  BfsOutcome out{1, 0};
  for (std::int64_t level = 1; level <= max_level; ++level) {
    std::fill(next.begin(), next.end(), 0);
    for_each_bit(frontier, [&](std::size_t v) { ops.or_into(next.data(), adj.row(v), words); });
    if (!ops.advance(next.data(), visited.data(), words)) break;
    out.reached += ops.popcount(next.data(), words);
    out.eccentricity = level;
    if (!on_level(level, next)) break;
    frontier.swap(next);
  }
  return out;
}

std::vector<ExtendedDistance> bfs_distances(const BitAdjacency& adj, std::size_t n, std::size_t source) {
  std::vector<ExtendedDistance> dist(n);
  dist[source] = ExtendedDistance(0);
  bit_bfs(adj, source, std::numeric_limits<std::int64_t>::max(), [&](std::int64_t level, const std::vector<Word>& fresh) {
    for_each_bit(fresh, [&](std::size_t v) { dist[v] = ExtendedDistance(level); });
    return true;
  });
  return dist;
}

struct OutEdge {
  VertexId to;
  Weight weight;
};

std::vector<std::vector<OutEdge>> adjacency_lists(const Digraph& d, bool symmetric) {
  std::vector<std::vector<OutEdge>> adj(static_cast<std::size_t>(d.vertex_count()));
  for (const Arc& a : d.arcs()) {
    adj[static_cast<std::size_t>(a.tail)].push_back({a.head, a.weight});
    if (symmetric) adj[static_cast<std::size_t>(a.head)].push_back({a.tail, a.weight});
  }
  return adj;
}

std::vector<ExtendedDistance> dijkstra(const std::vector<std::vector<OutEdge>>& adj, VertexId source) {
  constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(adj.size(), kUnset);
  using Item = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  best[static_cast<std::size_t>(source)] = 0;
  queue.emplace(0, source);
  while (!queue.empty()) {
    const auto [dist, u] = queue.top();
    queue.pop();
    if (dist != best[static_cast<std::size_t>(u)]) continue;
    for (const OutEdge& e : adj[static_cast<std::size_t>(u)]) {
      const std::int64_t cand = dist + e.weight;
      if (cand < best[static_cast<std::size_t>(e.to)]) {
        best[static_cast<std::size_t>(e.to)] = cand;
        queue.emplace(cand, e.to);
      }
    }
  }
  std::vector<ExtendedDistance> out(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (best[v] != kUnset) out[v] = ExtendedDistance(best[v]);
  return out;
}

bool use_bfs(const Digraph& d, DistanceEngine engine) {
  switch (engine) {
    case DistanceEngine::Auto:
      return d.unit_weights();
    case DistanceEngine::Bfs:
      if (!d.unit_weights()) throw InvalidArgument("BFS distances need unit weights");
      return true;
    case DistanceEngine::Dijkstra:
      return false;
  }
  return false;
}

}  // namespace

ExtendedDistance DistanceMatrix::max_off_diagonal() const {
  ExtendedDistance best(0);
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v = 0; v < n_; ++v)
      if (u != v) best = std::max(best, at(u, v));
  return best;
}

std::vector<ExtendedDistance> distances_from(const Digraph& d, VertexId source, DistanceEngine engine) {
  check_vertex(d, source);
  if (use_bfs(d, engine))
    return bfs_distances(BitAdjacency(d), static_cast<std::size_t>(d.vertex_count()), static_cast<std::size_t>(source));
  return dijkstra(adjacency_lists(d, false), source);
}

ExtendedDistance distance(const Digraph& d, VertexId u, VertexId v) {
  check_vertex(d, v);
  return distances_from(d, u)[static_cast<std::size_t>(v)];
}

DistanceMatrix all_pairs_distances(const Digraph& d, DistanceEngine engine) {
  const VertexId n = d.vertex_count();
  DistanceMatrix m(n);
  auto fill_row = [&](VertexId u, const std::vector<ExtendedDistance>& row) {
    for (VertexId v = 0; v < n; ++v) m.at(u, v) = row[static_cast<std::size_t>(v)];
  };
  if (use_bfs(d, engine)) {
    const BitAdjacency adj(d);
    for (VertexId u = 0; u < n; ++u)
      fill_row(u, bfs_distances(adj, static_cast<std::size_t>(n), static_cast<std::size_t>(u)));
  } else {
    const auto adj = adjacency_lists(d, false);
    for (VertexId u = 0; u < n; ++u) fill_row(u, dijkstra(adj, u));
  }
  return m;
}

DistanceMatrix undirected_distances(const Digraph& d) {
  const VertexId n = d.vertex_count();
  DistanceMatrix m(n);
  if (d.unit_weights()) {
    const BitAdjacency adj(d, false, true);
    for (VertexId u = 0; u < n; ++u) {
      const auto row = bfs_distances(adj, static_cast<std::size_t>(n), static_cast<std::size_t>(u));
      for (VertexId v = 0; v < n; ++v) m.at(u, v) = row[static_cast<std::size_t>(v)];
    }
    return m;
  }
  const auto adj = adjacency_lists(d, true);
  for (VertexId u = 0; u < n; ++u) {
    const auto row = dijkstra(adj, u);
    for (VertexId v = 0; v < n; ++v) m.at(u, v) = row[static_cast<std::size_t>(v)];
  }
  return m;
}

ExtendedDistance diameter(const Digraph& d, DistanceEngine engine) {
  const VertexId n = d.vertex_count();
  if (n <= 1) return ExtendedDistance(0);
  if (use_bfs(d, engine)) {
    const BitAdjacency adj(d);
    std::int64_t best = 0;
    for (VertexId u = 0; u < n; ++u) {
      const BfsOutcome r = bit_bfs(adj, static_cast<std::size_t>(u), std::numeric_limits<std::int64_t>::max(),
                                   [](std::int64_t, const std::vector<Word>&) { return true; });
      if (r.reached != static_cast<std::size_t>(n)) return ExtendedDistance::infinite();
      best = std::max(best, r.eccentricity);
    }
    return ExtendedDistance(best);
  }
  const auto adj = adjacency_lists(d, false);
  ExtendedDistance best(0);
  for (VertexId u = 0; u < n; ++u) {
    for (const ExtendedDistance& x : dijkstra(adj, u)) {
      best = std::max(best, x);
      if (best.is_infinite()) return best;
    }
  }
  return best;
}

bool diameter_at_most(const Digraph& d, std::int64_t bound) {
  const VertexId n = d.vertex_count();
  if (n <= 1) return bound >= 0;
  if (bound < 0) return false;
  if (d.unit_weights()) {
    const BitAdjacency adj(d);
    for (VertexId u = 0; u < n; ++u) {
      const BfsOutcome r = bit_bfs(adj, static_cast<std::size_t>(u), bound,
                                   [](std::int64_t, const std::vector<Word>&) { return true; });
      if (r.reached != static_cast<std::size_t>(n)) return false;
    }
    return true;
  }
  const auto adj = adjacency_lists(d, false);
  for (VertexId u = 0; u < n; ++u)
    for (const ExtendedDistance& x : dijkstra(adj, u))
      if (!x.at_most(bound)) return false;
  return true;
}

bool is_strongly_connected(const Digraph& d) {
  const VertexId n = d.vertex_count();
  if (n <= 1) return true;
  auto reaches_all = [&](const BitAdjacency& adj) {
    const BfsOutcome r = bit_bfs(adj, 0, std::numeric_limits<std::int64_t>::max(),
                                 [](std::int64_t, const std::vector<Word>&) { return true; });
    return r.reached == static_cast<std::size_t>(n);
  };
  return reaches_all(BitAdjacency(d)) && reaches_all(BitAdjacency(d, true));
}

}  // namespace revdiam
