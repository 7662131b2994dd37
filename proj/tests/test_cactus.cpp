#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "revdiam/cactus.hpp"
#include "revdiam/error.hpp"
#include "revdiam/reductions.hpp"
#include "support.hpp"

using namespace revdiam;

namespace {

CycleTree tree_of(const CactusDecomposition& dec) {
  REQUIRE(std::holds_alternative<CycleTree>(dec));
  return std::get<CycleTree>(dec);
}

// Union-find over cycles along tree_edges: a spanning tree iff no edge closes a loop
// and the edge count is cycles - 1.
bool tree_edges_form_tree(const CycleTree& t) {
  if (t.cycles.empty()) return t.tree_edges.empty();
  if (t.tree_edges.size() + 1 != t.cycles.size()) return false;
  std::vector<std::size_t> parent(t.cycles.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const TreeEdge& e : t.tree_edges) {
    const std::size_t a = find(e.a), b = find(e.b);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

void check_invariants(const Digraph& d, const CycleTree& t) {
  // Every original arc in exactly one cycle, synthetic arcs only in synthetic cycles.
  std::vector<int> seen(static_cast<std::size_t>(t.expanded.arc_count()), 0);
  for (const Cycle& c : t.cycles) {
    REQUIRE(c.arcs.size() == c.vertices.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Arc& a = t.expanded.arc(c.arcs[i]);
      const VertexId x = c.vertices[i], y = c.vertices[(i + 1) % c.size()];
      CHECK(((a.tail == x && a.head == y) || (a.tail == y && a.head == x)));
      ++seen[static_cast<std::size_t>(c.arcs[i])];
      CHECK((t.arc_origin[static_cast<std::size_t>(c.arcs[i])] < 0) == c.synthetic);
    }
  }
  for (int s : seen) CHECK(s == 1);
  for (ArcId id = 0; id < d.arc_count(); ++id) {
    CHECK(t.arc_origin[static_cast<std::size_t>(id)] == id);
    const Arc& orig = d.arc(id);
    const Arc& exp = t.expanded.arc(id);
    CHECK(t.vertex_origin[static_cast<std::size_t>(exp.tail)] == orig.tail);
    CHECK(t.vertex_origin[static_cast<std::size_t>(exp.head)] == orig.head);
  }
  // Pairwise at most one shared vertex; tree edges join cycles through their cut vertex.
  for (std::size_t i = 0; i < t.cycles.size(); ++i)
    for (std::size_t j = i + 1; j < t.cycles.size(); ++j) {
      std::size_t shared = 0;
      for (VertexId v : t.cycles[i].vertices)
        shared += std::count(t.cycles[j].vertices.begin(), t.cycles[j].vertices.end(), v);
      CHECK(shared <= 1);
    }
  for (const TreeEdge& e : t.tree_edges) {
    const auto& a = t.cycles[e.a].vertices;
    const auto& b = t.cycles[e.b].vertices;
    CHECK(std::count(a.begin(), a.end(), e.cut_vertex) == 1);
    CHECK(std::count(b.begin(), b.end(), e.cut_vertex) == 1);
  }
  CHECK(tree_edges_form_tree(t));
  for (const auto& list : t.cycles_by_vertex()) CHECK(list.size() <= 2);
}

}  // namespace

TEST_CASE("single cycle") {
  const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
  const CycleTree t = tree_of(cactus_decompose(d));
  CHECK(t.cycles.size() == 1);
  CHECK(t.tree_edges.empty());
  check_invariants(d, t);
}

TEST_CASE("two triangles sharing a vertex") {
  const Digraph d(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const CycleTree t = tree_of(cactus_decompose(d));
  CHECK(t.cycles.size() == 2);
  CHECK(t.tree_edges.size() == 1);
  CHECK(t.vertex_origin[static_cast<std::size_t>(t.tree_edges[0].cut_vertex)] == 2);
  check_invariants(d, t);
}

TEST_CASE("partition chains are paths of 2-cycles") {
  for (const std::vector<std::int64_t>& values : {std::vector<std::int64_t>{1, 1}, {1, 2, 3}}) {
    const PartitionReduction red = partition_to_weighted_kreversals({values});
    const CycleTree t = tree_of(cactus_decompose(red.graph));
    CHECK(t.cycles.size() == values.size());
    for (const Cycle& c : t.cycles) CHECK(c.size() == 2);
    CHECK(t.tree_edges.size() + 1 == values.size());
    check_invariants(red.graph, t);
  }
}

TEST_CASE("three cycles through one vertex use a synthetic ring") {
  const Digraph d(7, {{0, 1}, {1, 0}, {0, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
  const CycleTree t = tree_of(cactus_decompose(d));
  CHECK(t.real_cycle_count() == 3);
  CHECK(t.cycles.size() == 4);
  CHECK(t.expanded.vertex_count() == 9);
  check_invariants(d, t);
}

TEST_CASE("non-cactus and bridges are reported") {
  // K4 minus an edge: two triangles share an edge.
  const Digraph diamond(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}});
  CHECK(std::holds_alternative<NotCactusResult>(cactus_decompose(diamond)));
  const Digraph bridged(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
  const auto dec = cactus_decompose(bridged);
  REQUIRE(std::holds_alternative<HasBridgeResult>(dec));
  CHECK(std::get<HasBridgeResult>(dec).arc == 2);
  CHECK_THROWS_AS(cactus_decompose(Digraph(4, {{0, 1}, {2, 3}})), InvalidArgument);
}

TEST_CASE("random cacti decompose with all invariants") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const Digraph d = testing::random_cactus(rng, 1 + rng() % 6, 18);
    const CactusDecomposition dec = cactus_decompose(d);
    const CycleTree t = tree_of(dec);
    check_invariants(d, t);
  }
}

TEST_CASE("strongly connected orientations orient every cycle") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 60; ++iter) {
    const Digraph d = testing::random_cactus(rng, 1 + rng() % 4, 12);
    const CycleTree t = tree_of(cactus_decompose(d));
    const auto m = static_cast<std::size_t>(d.arc_count());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Digraph g = d;
      for (std::size_t a = 0; a < m; ++a)
        if (mask >> a & 1) g.reverse_arc(static_cast<ArcId>(a));
      bool cyclic = true;
      for (const Cycle& c : t.cycles) {
        if (c.synthetic) continue;
        std::size_t forward = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
          forward += g.arc(c.arcs[i]).tail == t.vertex_origin[static_cast<std::size_t>(c.vertices[i])];
        cyclic = cyclic && (forward == 0 || forward == c.size());
      }
      REQUIRE(cyclic == (testing::floyd_diameter(g) < testing::kInf));
    }
  }
}
