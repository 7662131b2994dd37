#include "revdiam/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "revdiam/error.hpp"

namespace revdiam {

Digraph::Digraph(VertexId vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
}

Digraph::Digraph(VertexId vertex_count, std::vector<Arc> arcs) : Digraph(vertex_count) {
  for (const Arc& a : arcs) check_arc(a);
  arcs_ = std::move(arcs);
}

Digraph::Digraph(VertexId vertex_count, std::initializer_list<Arc> arcs)
    : Digraph(vertex_count, std::vector<Arc>(arcs)) {}

void Digraph::check_arc(const Arc& a) const {
  if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
    throw InvalidArgument("arc endpoint out of range: (" + std::to_string(a.tail) + ", " +
                          std::to_string(a.head) + ")");
  if (a.tail == a.head) throw InvalidArgument("self-loop at vertex " + std::to_string(a.tail));
  if (a.weight < 0) throw InvalidArgument("negative arc weight");
}

ArcId Digraph::add_arc(VertexId tail, VertexId head, Weight weight) {
  Arc a{tail, head, weight};
  check_arc(a);
  arcs_.push_back(a);
  return static_cast<ArcId>(arcs_.size() - 1);
}

bool Digraph::unit_weights() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.weight == 1; });
}

Weight Digraph::total_weight() const {
  return std::accumulate(arcs_.begin(), arcs_.end(), Weight{0},
                         [](Weight s, const Arc& a) { return s + a.weight; });
}

void Digraph::reverse_arc(ArcId id) {
  if (id < 0 || id >= arc_count()) throw InvalidArgument("arc id out of range: " + std::to_string(id));
  std::swap(arcs_[static_cast<std::size_t>(id)].tail, arcs_[static_cast<std::size_t>(id)].head);
}

ReversalSet::ReversalSet(std::vector<ArcId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (!ids_.empty() && ids_.front() < 0) throw InvalidArgument("negative arc id in reversal set");
}

void ReversalSet::validate(const Digraph& d) const {
  if (!ids_.empty() && ids_.back() >= d.arc_count())
    throw InvalidArgument("arc id out of range: " + std::to_string(ids_.back()));
}

bool ReversalSet::contains(ArcId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

Weight ReversalSet::total_weight(const Digraph& d) const {
  validate(d);
  Weight w = 0;
  for (ArcId id : ids_) w += d.arc(id).weight;
  return w;
}

Digraph reverse_arcs(const Digraph& d, const ReversalSet& f) {
  f.validate(d);
  Digraph out = d;
  for (ArcId id : f.ids()) out.reverse_arc(id);
  return out;
}

Digraph reverse_all(const Digraph& d) {
  Digraph out = d;
  for (ArcId id = 0; id < d.arc_count(); ++id) out.reverse_arc(id);
  return out;
}

}  // namespace revdiam
