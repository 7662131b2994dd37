#include "revdiam/reductions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "revdiam/distance.hpp"
#include "revdiam/error.hpp"

namespace revdiam {

void DominatingSetInstance::validate() const {
  if (n < 0) throw InvalidArgument("negative vertex count");
  if (ell < 0) throw InvalidArgument("negative dominating set bound");
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("self-loop in source graph");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw InvalidArgument("parallel edge in source graph");
  }
}

DominatingSetReduction dominating_set_to_kreversals(const DominatingSetInstance& inst) {
  inst.validate();
  DominatingSetReduction out;
  out.k = inst.ell;
  out.graph = Digraph(8 * inst.n);
  Digraph& h = out.graph;

  for (VertexId i = 0; i < inst.n; ++i) {
    const VertexId base = 8 * i;
    out.map.gadgets.push_back(Gadget{base, base + 1, base + 2, base + 3, base + 4, base + 5, base + 6, base + 7, -1});
  }

  for (Gadget& g : out.map.gadgets) {
    g.top_arc = h.add_arc(g.u1, g.u2);
    h.add_arc(g.d1, g.d2);
    h.add_arc(g.u1, g.d1);
    h.add_arc(g.d2, g.u2);
  }

  auto both = [&](VertexId x, VertexId y) {
    h.add_arc(x, y);
    h.add_arc(y, x);
  };
  for (const Gadget& g : out.map.gadgets) {
    both(g.u1, g.au1);
    both(g.u2, g.au2);
    both(g.d1, g.ad1);
    both(g.d2, g.ad2);
    const std::array<VertexId, 4> aux{g.au1, g.au2, g.ad1, g.ad2};
    for (std::size_t a = 0; a < aux.size(); ++a)
      for (std::size_t b = a + 1; b < aux.size(); ++b)
        if (!(aux[a] == g.ad1 && aux[b] == g.ad2)) both(aux[a], aux[b]);
  }

  auto edges = inst.edges;
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  for (auto [i, j] : edges) {
    const Gadget& gi = out.map.gadgets[static_cast<std::size_t>(i)];
    const Gadget& gj = out.map.gadgets[static_cast<std::size_t>(j)];
    h.add_arc(gi.u1, gj.d1);
    h.add_arc(gj.d2, gi.u2);
    h.add_arc(gj.u1, gi.d1);
    h.add_arc(gi.d2, gj.u2);
  }

  for (VertexId i = 0; i < inst.n; ++i)
    for (VertexId j = i + 1; j < inst.n; ++j) {
      const Gadget& gi = out.map.gadgets[static_cast<std::size_t>(i)];
      const Gadget& gj = out.map.gadgets[static_cast<std::size_t>(j)];
      for (VertexId x : {gi.au1, gi.au2, gi.ad1, gi.ad2})
        for (VertexId y : {gj.au1, gj.au2, gj.ad1, gj.ad2}) both(x, y);
    }

  if (inst.n > 0 && diameter(h) != ExtendedDistance(4))
    throw std::logic_error("gadget digraph does not have diameter 4");
  return out;
}

std::vector<VertexId> extract_dominating_set(const ReversalSet& f, const GadgetMap& map) {
  std::vector<VertexId> chosen;
  for (ArcId id : f.ids()) {
    const auto it = std::find_if(map.gadgets.begin(), map.gadgets.end(),
                                 [&](const Gadget& g) { return g.top_arc == id; });
    if (it == map.gadgets.end())
      throw InvalidArgument("arc " + std::to_string(id) + " is not a gadget top arc (u1, u2)");
    chosen.push_back(static_cast<VertexId>(it - map.gadgets.begin()));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::int64_t PartitionInstance::sum() const { return std::accumulate(values.begin(), values.end(), std::int64_t{0}); }

void PartitionInstance::validate() const {
  if (values.empty()) throw InvalidArgument("partition instance needs at least one value");
  if (std::any_of(values.begin(), values.end(), [](std::int64_t a) { return a <= 0; }))
    throw InvalidArgument("partition values must be positive");
  if (sum() % 2 != 0) throw InvalidArgument("partition values have odd sum");
}

PartitionReduction partition_to_weighted_kreversals(const PartitionInstance& inst) {
  inst.validate();
  const auto n = static_cast<VertexId>(inst.values.size());
  PartitionReduction out;
  out.graph = Digraph(n + 1);
  for (VertexId i = 0; i < n; ++i) {
    out.e_arcs.push_back(out.graph.add_arc(i, i + 1, 1));
    out.f_arcs.push_back(out.graph.add_arc(i, i + 1, inst.values[static_cast<std::size_t>(i)] + 1));
  }
  out.half_sum = inst.sum() / 2;
  out.d = out.half_sum + n;
  out.k = out.half_sum + n;
  return out;
}

std::vector<std::size_t> extract_partition(const ReversalSet& f, const PartitionInstance& inst,
                                           const PartitionReduction& reduced) {
  if (inst.values.size() != reduced.f_arcs.size()) throw InvalidArgument("instance and reduction disagree");
  const Digraph after = reverse_arcs(reduced.graph, f);
  if (f.total_weight(reduced.graph) > reduced.k || !diameter(after).at_most(reduced.d))
    throw InvalidArgument("reversal set is not a witness for the partition instance");
  std::vector<std::size_t> side;
  for (std::size_t i = 0; i < reduced.f_arcs.size(); ++i)
    if (after.arc(reduced.f_arcs[i]).tail == static_cast<VertexId>(i)) side.push_back(i);
  return side;
}

}  // namespace revdiam
