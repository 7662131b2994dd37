#pragma once

#include <vector>

#include "revdiam/digraph.hpp"

namespace revdiam {

/// Which single-source routine computes distances.
enum class DistanceEngine {
  Auto,      ///< bitset BFS for unit weights, Dijkstra otherwise
  Bfs,       ///< bitset BFS; only valid on unit-weight graphs
  Dijkstra,  ///< priority-queue search, any nonnegative weights
};

/// Row-major n x n matrix of shortest-path lengths.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(VertexId n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

  VertexId size() const { return n_; }
  ExtendedDistance& at(VertexId u, VertexId v) { return cells_[index(u, v)]; }
  const ExtendedDistance& at(VertexId u, VertexId v) const { return cells_[index(u, v)]; }

  /// Max over ordered pairs u != v; Finite(0) when n <= 1.
  ExtendedDistance max_off_diagonal() const;

 private:
  std::size_t index(VertexId u, VertexId v) const { return static_cast<std::size_t>(u) * n_ + v; }

  VertexId n_ = 0;
  std::vector<ExtendedDistance> cells_;
};

std::vector<ExtendedDistance> distances_from(const Digraph& d, VertexId source,
                                             DistanceEngine engine = DistanceEngine::Auto);

ExtendedDistance distance(const Digraph& d, VertexId u, VertexId v);

DistanceMatrix all_pairs_distances(const Digraph& d, DistanceEngine engine = DistanceEngine::Auto);

/// Distances in the underlying bidirected graph (every arc usable both ways).
DistanceMatrix undirected_distances(const Digraph& d);

ExtendedDistance diameter(const Digraph& d, DistanceEngine engine = DistanceEngine::Auto);

/// Same answer as diameter(d).at_most(bound) but stops at the first far pair.
bool diameter_at_most(const Digraph& d, std::int64_t bound);

bool is_strongly_connected(const Digraph& d);

}  // namespace revdiam
