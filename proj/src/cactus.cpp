#include "revdiam/cactus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "revdiam/error.hpp"

namespace revdiam {

namespace {

struct Incidence {
  VertexId other;
  ArcId arc;
};

std::vector<std::vector<Incidence>> undirected_incidence(const Digraph& d) {
  std::vector<std::vector<Incidence>> inc(static_cast<std::size_t>(d.vertex_count()));
  for (ArcId id = 0; id < d.arc_count(); ++id) {
    const Arc& a = d.arc(id);
    inc[static_cast<std::size_t>(a.tail)].push_back({a.head, id});
    inc[static_cast<std::size_t>(a.head)].push_back({a.tail, id});
  }
  return inc;
}

// Biconnected blocks as arc lists (Hopcroft-Tarjan on the multigraph; the
// tree arc, not the parent vertex, is excluded when computing low points so
// parallel arcs close 2-cycles).
std::vector<std::vector<ArcId>> blocks(const Digraph& d, const std::vector<std::vector<Incidence>>& inc) {
  const auto n = static_cast<std::size_t>(d.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<ArcId> stack;
  std::vector<std::vector<ArcId>> out;
  int clock = 0;

  std::function<void(VertexId, ArcId)> visit = [&](VertexId u, ArcId via) {
    const auto ui = static_cast<std::size_t>(u);
    disc[ui] = low[ui] = clock++;
    for (const Incidence& e : inc[ui]) {
      if (e.arc == via) continue;
      const auto wi = static_cast<std::size_t>(e.other);
      if (disc[wi] == -1) {
        stack.push_back(e.arc);
        visit(e.other, e.arc);
        low[ui] = std::min(low[ui], low[wi]);
        if (low[wi] >= disc[ui]) {
          std::vector<ArcId> block;
          while (true) {
            const ArcId top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e.arc) break;
          }
          out.push_back(std::move(block));
        }
      } else if (disc[wi] < disc[ui]) {
        stack.push_back(e.arc);
        low[ui] = std::min(low[ui], disc[wi]);
      }
    }
  };
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (disc[static_cast<std::size_t>(v)] == -1) visit(v, -1);
  for (auto& b : out) std::sort(b.begin(), b.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// Walks a cycle block starting from its lowest vertex along its lowest arc.
Cycle trace_cycle(const Digraph& d, const std::vector<ArcId>& block) {
  std::vector<std::vector<ArcId>> at;  // block arcs per vertex, via a small map
  std::vector<VertexId> verts;
  for (ArcId id : block) {
    verts.push_back(d.arc(id).tail);
    verts.push_back(d.arc(id).head);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  at.resize(verts.size());
  for (ArcId id : block) {
    at[local(d.arc(id).tail)].push_back(id);
    at[local(d.arc(id).head)].push_back(id);
  }

  Cycle c;
  std::set<ArcId> used;
  VertexId cur = verts.front();
  ArcId arc = *std::min_element(at[0].begin(), at[0].end());
  while (true) {
    c.vertices.push_back(cur);
    c.arcs.push_back(arc);
    used.insert(arc);
    const Arc& a = d.arc(arc);
    cur = a.tail == cur ? a.head : a.tail;
    if (cur == verts.front()) break;
    const auto& options = at[local(cur)];
    const auto next = std::find_if(options.begin(), options.end(), [&](ArcId x) { return !used.count(x); });
    arc = *next;
  }
  return c;
}

}  // namespace

bool is_undirected_connected(const Digraph& d) {
  const auto n = static_cast<std::size_t>(d.vertex_count());
  if (n <= 1) return true;
  const auto inc = undirected_incidence(d);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> todo{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const VertexId u = todo.back();
    todo.pop_back();
    for (const Incidence& e : inc[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(e.other)]) {
        seen[static_cast<std::size_t>(e.other)] = true;
        ++count;
        todo.push_back(e.other);
      }
    }
  }
  return count == n;
}

std::size_t CycleTree::real_cycle_count() const {
  return static_cast<std::size_t>(
      std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return !c.synthetic; }));
}

std::vector<std::vector<std::size_t>> CycleTree::cycles_by_vertex() const {
  std::vector<std::vector<std::size_t>> by(static_cast<std::size_t>(expanded.vertex_count()));
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (VertexId v : cycles[c].vertices) by[static_cast<std::size_t>(v)].push_back(c);
  return by;
}

VertexId CycleTree::representative(VertexId original) const {
  for (std::size_t v = 0; v < vertex_origin.size(); ++v)
    if (vertex_origin[v] == original) return static_cast<VertexId>(v);
  throw InvalidArgument("vertex id out of range: " + std::to_string(original));
}

CactusDecomposition cactus_decompose(const Digraph& d) {
  if (!is_undirected_connected(d)) throw InvalidArgument("cactus decomposition needs a connected graph");

  const auto inc = undirected_incidence(d);
  const auto all_blocks = blocks(d, inc);

  std::optional<ArcId> bridge;
  for (const auto& b : all_blocks) {
    std::set<VertexId> vs;
    for (ArcId id : b) {
      vs.insert(d.arc(id).tail);
      vs.insert(d.arc(id).head);
    }
    if (b.size() == 1) {
      if (!bridge) bridge = b.front();
    } else if (b.size() != vs.size()) {
      return NotCactusResult{{*vs.begin(), *std::next(vs.begin())}};
    }
  }
  if (bridge) return HasBridgeResult{*bridge};

  CycleTree t;
  t.expanded = d;
  t.original_arc_count = d.arc_count();
  t.vertex_origin.resize(static_cast<std::size_t>(d.vertex_count()));
  std::iota(t.vertex_origin.begin(), t.vertex_origin.end(), 0);
  t.arc_origin.resize(static_cast<std::size_t>(d.arc_count()));
  std::iota(t.arc_origin.begin(), t.arc_origin.end(), 0);
  for (const auto& b : all_blocks) t.cycles.push_back(trace_cycle(d, b));

  // Split vertices shared by three or more cycles.
  const std::size_t real = t.cycles.size();
  std::vector<std::vector<std::size_t>> by(static_cast<std::size_t>(d.vertex_count()));
  for (std::size_t c = 0; c < real; ++c)
    for (VertexId v : t.cycles[c].vertices) by[static_cast<std::size_t>(v)].push_back(c);

  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  VertexId next_vertex = d.vertex_count();
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    const auto& owners = by[static_cast<std::size_t>(v)];
    if (owners.size() < 3) continue;
    Cycle hub;
    hub.synthetic = true;
    hub.vertices.push_back(v);
    for (std::size_t j = 1; j < owners.size(); ++j) {
      const VertexId copy = next_vertex++;
      t.vertex_origin.push_back(v);
      hub.vertices.push_back(copy);
      Cycle& c = t.cycles[owners[j]];
      std::replace(c.vertices.begin(), c.vertices.end(), v, copy);
      for (ArcId id : c.arcs) {
        Arc& a = arcs[static_cast<std::size_t>(id)];
        if (a.tail == v) a.tail = copy;
        if (a.head == v) a.head = copy;
      }
    }
    for (std::size_t j = 0; j < hub.vertices.size(); ++j) {
      hub.arcs.push_back(static_cast<ArcId>(arcs.size()));
      arcs.push_back({hub.vertices[j], hub.vertices[(j + 1) % hub.vertices.size()], 0});
      t.arc_origin.push_back(-1);
    }
    t.cycles.push_back(std::move(hub));
  }
  t.expanded = Digraph(next_vertex, std::move(arcs));

  const auto owners = t.cycles_by_vertex();
  for (std::size_t v = 0; v < owners.size(); ++v)
    if (owners[v].size() == 2) t.tree_edges.push_back({owners[v][0], owners[v][1], static_cast<VertexId>(v)});
  t.root = 0;
  return t;
}

}  // namespace revdiam
