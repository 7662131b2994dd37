#pragma once

#include <array>
#include <utility>
#include <vector>

#include "revdiam/digraph.hpp"

namespace revdiam {

/// Simple undirected graph plus the dominating-set size bound.
struct DominatingSetInstance {
  VertexId n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::int64_t ell = 0;

  /// Throws InvalidArgument on self-loops, parallel edges, bad ids, or ell < 0.
  void validate() const;
};

/// Vertex ids of one 8-vertex gadget.
struct Gadget {
  VertexId u1, u2, d1, d2;      // upper and down vertices
  VertexId au1, au2, ad1, ad2;  // their auxiliary partners
  ArcId top_arc;                // arc (u1, u2)
};

struct GadgetMap {
  std::vector<Gadget> gadgets;  // gadget i encodes source vertex i
};

struct DominatingSetReduction {
  Digraph graph;
  std::int64_t d = 3;
  std::int64_t k = 0;
  GadgetMap map;
};

/// Gadget digraph H with diameter exactly 4, target d = 3 and k = ell.
DominatingSetReduction dominating_set_to_kreversals(const DominatingSetInstance& inst);

/// Source vertices whose gadget top arc is in f. Throws InvalidArgument when f
/// holds any other arc.
std::vector<VertexId> extract_dominating_set(const ReversalSet& f, const GadgetMap& map);

struct PartitionInstance {
  std::vector<std::int64_t> values;

  std::int64_t sum() const;
  /// Throws InvalidArgument when empty, non-positive, or of odd sum.
  void validate() const;
};

struct PartitionReduction {
  Digraph graph;
  std::int64_t half_sum = 0;  // b
  std::int64_t d = 0;         // b + n
  std::int64_t k = 0;         // b + n
  std::vector<ArcId> e_arcs;  // weight 1, v_i -> v_{i+1}
  std::vector<ArcId> f_arcs;  // weight a_i + 1, v_i -> v_{i+1}
};

/// Chain of n parallel arc pairs; weighted target and budget b + n.
PartitionReduction partition_to_weighted_kreversals(const PartitionInstance& inst);

/// Indices i (0-based) whose f_i points v_i -> v_{i+1} after reversing f.
/// Throws InvalidArgument unless f is a witness for the reduced instance.
std::vector<std::size_t> extract_partition(const ReversalSet& f, const PartitionInstance& inst,
                                           const PartitionReduction& reduced);

}  // namespace revdiam
