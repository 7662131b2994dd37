#include <doctest.h>

#include <random>

#include "revdiam/cactus.hpp"
#include "revdiam/cactus_solver.hpp"
#include "revdiam/distance.hpp"
#include "revdiam/error.hpp"
#include "revdiam/reductions.hpp"
#include "support.hpp"

using namespace revdiam;

namespace {

CycleTree tree_of(const CactusDecomposition& dec) {
  REQUIRE(std::holds_alternative<CycleTree>(dec));
  return std::get<CycleTree>(dec);
}

}  // namespace

TEST_CASE("cycle costs") {
  const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
  const CycleTree t = tree_of(cactus_decompose(d));
  const auto c = cycle_costs(d, t);
  REQUIRE(c.size() == 1);
  CHECK(c[0].clockwise == 0);
  CHECK(c[0].total == 3);
  const Digraph f = reverse_arcs(d, {1});
  const auto cf = cycle_costs(f, tree_of(cactus_decompose(f)));
  CHECK(cf[0].clockwise == 1);
  CHECK(cf[0].counterclockwise() == 2);

  // Partition 2-cycle {e: w 1, f: w a+1} both forward: one orientation costs 1, the other a+1.
  const Digraph p(2, {{0, 1, 1}, {0, 1, 4}});
  const auto pc = cycle_costs(p, tree_of(cactus_decompose(p)), CostMode::Weight);
  CHECK(std::min(pc[0].clockwise, pc[0].counterclockwise()) == 1);
  CHECK(std::max(pc[0].clockwise, pc[0].counterclockwise()) == 4);
}

TEST_CASE("cactus solver examples") {
  for (int len = 2; len <= 6; ++len) {
    Digraph c(len);
    for (int i = 0; i < len; ++i) c.add_arc(i, (i + 1) % len);
    const auto s = solve_cactus(c, std::max(2, len - 1), 0, CostMode::Cardinality);
    REQUIRE(s);
    CHECK(s->witness.empty());
    CHECK(s->achieved_diameter == ExtendedDistance::finite(len - 1));
  }
  const Digraph c4(4, {{0, 1}, {1, 2}, {3, 2}, {3, 0}});
  const auto one = solve_cactus(c4, 3, 1, CostMode::Cardinality);
  REQUIRE(one);
  CHECK(one->cost == 1);
  CHECK(one->witness == ReversalSet{2});

  const PartitionReduction red = partition_to_weighted_kreversals({{1, 2, 3}});
  const auto p = solve_cactus(red.graph, red.d, red.k, CostMode::Weight);
  REQUIRE(p);
  CHECK(p->cost == 6);
  CHECK_FALSE(solve_cactus(red.graph, red.d, 5, CostMode::Weight));
}

TEST_CASE("bridges, non-cacti and bad arguments") {
  const Digraph bridged(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK_FALSE(solve_cactus(bridged, 10, 10, CostMode::Cardinality));
  const Digraph diamond(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}});
  CHECK_THROWS_AS(solve_cactus(diamond, 3, 3, CostMode::Cardinality), NotCactus);
  CHECK_THROWS_AS(solve_cactus(Digraph(2, {{0, 1}, {1, 0}}), 1, 0, CostMode::Cardinality), DiameterBelowTwo);
}

TEST_CASE("cactus solver matches brute force on random cacti") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 120; ++iter) {
    const CostMode mode = iter % 3 == 0 ? CostMode::Weight : CostMode::Cardinality;
    const Digraph d = testing::random_cactus(rng, 1 + rng() % 5, 12, 5, mode == CostMode::Weight ? 3 : 1);
    const std::int64_t max_k = mode == CostMode::Weight ? d.total_weight() : d.arc_count();
    for (std::int64_t target = 2; target <= 9; ++target) {
      const auto ref = testing::brute_min_reversals(d, target, mode == CostMode::Weight);
      for (std::int64_t k = 0; k <= max_k; ++k) {
        const auto got = solve_cactus(d, target, k, mode);
        REQUIRE(got.has_value() == (ref && ref->cost <= k));
        if (!got) continue;
        REQUIRE(got->cost == ref->cost);
        CHECK(verify_solution(d, {target, k, mode}, *got));
      }
    }
  }
}

TEST_CASE("budget accounting adds per-cycle orientation costs") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    const Digraph d = testing::random_cactus(rng, 1 + rng() % 5, 16, 5, 3);
    const CycleTree t = tree_of(cactus_decompose(d));
    const auto costs = cycle_costs(d, t, CostMode::Weight);
    const auto s = solve_cactus(d, 12, d.total_weight(), CostMode::Weight);
    if (!s) continue;
    const Digraph g = reverse_arcs(d, s->witness);
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < t.cycles.size(); ++c) {
      const Cycle& cyc = t.cycles[c];
      if (cyc.synthetic) continue;
      const bool clockwise =
          g.arc(cyc.arcs[0]).tail == t.vertex_origin[static_cast<std::size_t>(cyc.vertices[0])];
      sum += clockwise ? costs[c].clockwise : costs[c].counterclockwise();
    }
    CHECK(sum == s->cost);
    CHECK(s->witness.total_weight(d) == s->cost);
  }
}

TEST_CASE("optimal cost is invariant under root choice and global reversal") {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 80; ++iter) {
    const Digraph d = testing::random_cactus(rng, 1 + rng() % 5, 14, 4, iter % 2 ? 2 : 1);
    const CostMode mode = iter % 2 ? CostMode::Weight : CostMode::Cardinality;
    const std::int64_t k = mode == CostMode::Weight ? d.total_weight() : d.arc_count();
    for (std::int64_t target = 2; target <= 8; ++target) {
      const auto base = solve_cactus(d, target, k, mode);
      const auto flipped = solve_cactus(reverse_all(d), target, k, mode);
      REQUIRE(base.has_value() == flipped.has_value());
      if (base) CHECK(base->cost == flipped->cost);
      for (VertexId root = 0; root < d.vertex_count(); ++root) {
        const auto r = solve_cactus(d, target, k, mode, {root});
        REQUIRE(r.has_value() == base.has_value());
        if (r) CHECK(r->cost == base->cost);
      }
    }
  }
}
