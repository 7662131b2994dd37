#pragma once

#include <variant>
#include <vector>

#include "revdiam/digraph.hpp"

namespace revdiam {

/// A simple cycle of the underlying undirected multigraph.
///
/// arcs[i] joins vertices[i] and vertices[(i + 1) % size]. The stored order is
/// the cycle's clockwise direction.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<ArcId> arcs;
  /// Zero-weight cycle inserted for a vertex shared by three or more cycles.
  bool synthetic = false;

  std::size_t size() const { return vertices.size(); }
};

struct TreeEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  VertexId cut_vertex = 0;  // id in the expanded graph
};

/**
 * Cycle decomposition of a bridgeless cactus.
 *
 * Vertices lying on q >= 3 cycles are split into q copies joined by a
 * zero-weight q-cycle, so every vertex of `expanded` lies on at most two
 * cycles and the cycle adjacency is a tree. Original arcs keep their ids in
 * `expanded`; synthetic arcs are appended after them.
 */
struct CycleTree {
  Digraph expanded;
  std::vector<VertexId> vertex_origin;  // expanded vertex -> original vertex
  std::vector<ArcId> arc_origin;        // expanded arc -> original arc, -1 if synthetic
  ArcId original_arc_count = 0;
  std::vector<Cycle> cycles;
  std::vector<TreeEdge> tree_edges;
  std::size_t root = 0;  // meaningless when cycles is empty

  /// Cycles built from original arcs only.
  std::size_t real_cycle_count() const;
  /// Cycles containing an expanded vertex, in index order.
  std::vector<std::vector<std::size_t>> cycles_by_vertex() const;
  /// Expanded vertex of some copy of an original vertex (the lowest id).
  VertexId representative(VertexId original) const;
};

struct NotCactusResult {
  std::vector<VertexId> shared;  // two vertices shared by one block, for diagnostics
};

struct HasBridgeResult {
  ArcId arc = -1;  // one arc lying on no cycle
};

using CactusDecomposition = std::variant<CycleTree, NotCactusResult, HasBridgeResult>;

/// Throws InvalidArgument when the underlying multigraph is disconnected.
CactusDecomposition cactus_decompose(const Digraph& d);

bool is_undirected_connected(const Digraph& d);

}  // namespace revdiam
