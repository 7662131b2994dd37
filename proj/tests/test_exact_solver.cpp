#include <doctest.h>

#include <random>

#include "revdiam/distance.hpp"
#include "revdiam/error.hpp"
#include "revdiam/exact_solver.hpp"
#include "revdiam/reductions.hpp"
#include "support.hpp"

using namespace revdiam;

namespace {

const Digraph kTriangle(3, {{0, 1}, {1, 2}, {2, 0}});

void check_against_brute(const Digraph& d, std::int64_t target, CostMode mode, const SolverOptions& opts) {
  const bool weighted = mode == CostMode::Weight;
  const auto ref = testing::brute_min_reversals(d, target, weighted);
  const auto all = oracle_min_reversals(d, target, mode);
  REQUIRE(ref.has_value() == all.has_value());
  if (ref) {
    CHECK(all->cost == ref->cost);
    CHECK(std::vector<ArcId>(all->witness.ids().begin(), all->witness.ids().end()) == ref->witness);
  }
  for (std::int64_t k = 0; k <= (weighted ? d.total_weight() : d.arc_count()); ++k) {
    const auto got = solve_k_reversals(d, {target, k, mode}, opts);
    const bool expect = ref && ref->cost <= k;
    REQUIRE(got.has_value() == expect);
    if (got) {
      CHECK(got->cost == ref->cost);
      CHECK(std::vector<ArcId>(got->witness.ids().begin(), got->witness.ids().end()) == ref->witness);
      CHECK(verify_solution(d, {target, k, mode}, *got));
    }
  }
}

}  // namespace

TEST_CASE("solver examples") {
  const auto a = solve_k_reversals(kTriangle, {2, 0});
  REQUIRE(a);
  CHECK(a->witness.empty());
  CHECK(a->achieved_diameter == ExtendedDistance::finite(2));

  const Digraph flipped = reverse_arcs(kTriangle, {0});
  const auto b = solve_k_reversals(flipped, {2, 1});
  REQUIRE(b);
  CHECK(b->witness == ReversalSet{0});
  CHECK(b->cost == 1);
  CHECK_FALSE(solve_k_reversals(flipped, {2, 0}));
}

TEST_CASE("dominating set instance from K3 picks gadget 0") {
  const DominatingSetReduction red = dominating_set_to_kreversals({3, {{0, 1}, {1, 2}, {0, 2}}, 1});
  const auto sol = solve_k_reversals(red.graph, {red.d, red.k});
  REQUIRE(sol);
  CHECK(sol->witness == ReversalSet{red.map.gadgets[0].top_arc});
  CHECK(sol->achieved_diameter == ExtendedDistance::finite(3));
  CHECK(sol->cost == 1);
}

TEST_CASE("oracle examples") {
  const Digraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto a = oracle_min_reversals(c4, 3, CostMode::Cardinality);
  REQUIRE(a);
  CHECK(a->witness.empty());
  CHECK(a->cost == 0);
  CHECK_FALSE(oracle_min_reversals(Digraph(2, {{0, 1}}), 5, CostMode::Cardinality));
  const Digraph p(3, {{0, 1, 1}, {0, 1, 2}, {1, 2, 1}, {1, 2, 2}});
  const auto w = oracle_min_reversals(p, 3, CostMode::Weight);
  REQUIRE(w);
  CHECK(w->cost == 3);
  std::mt19937_64 rng(1);
  const Digraph big = testing::random_digraph(rng, 6, 21);
  CHECK_THROWS_AS(oracle_min_reversals(big, 3, CostMode::Cardinality), CapExceeded);
  CHECK_NOTHROW(oracle_min_reversals(Digraph(5, {{0, 1}, {1, 2}}), 3, CostMode::Cardinality, 2));
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(solve_k_reversals(kTriangle, {1, 3}), DiameterBelowTwo);
  CHECK_THROWS_AS(solve_k_reversals(kTriangle, {2, -1}), InvalidArgument);
  CHECK_THROWS_AS(oracle_min_reversals(kTriangle, 1, CostMode::Cardinality), DiameterBelowTwo);
}

TEST_CASE("pruned and exhaustive strategies agree with brute force") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 80; ++iter) {
    const auto n = static_cast<VertexId>(2 + rng() % 5);
    const std::size_t m = 1 + rng() % 9;
    const CostMode mode = iter % 2 ? CostMode::Weight : CostMode::Cardinality;
    const Digraph d = testing::random_digraph(rng, n, m, mode == CostMode::Weight ? 3 : 1);
    const std::int64_t target = 2 + static_cast<std::int64_t>(rng() % 4);
    check_against_brute(d, target, mode, {SearchStrategy::Pruned, 1});
    check_against_brute(d, target, mode, {SearchStrategy::Exhaustive, 1});
  }
}

TEST_CASE("witnesses do not depend on thread count") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 60; ++iter) {
    const Digraph d = testing::random_digraph(rng, 5, 10, iter % 2 ? 3 : 1);
    const CostMode mode = iter % 2 ? CostMode::Weight : CostMode::Cardinality;
    const SolveBudget budget{3, mode == CostMode::Weight ? d.total_weight() : d.arc_count(), mode};
    const auto one = solve_k_reversals(d, budget, {SearchStrategy::Pruned, 1});
    for (unsigned threads : {2u, 4u}) {
      CHECK(solve_k_reversals(d, budget, {SearchStrategy::Pruned, threads}) == one);
      CHECK(solve_k_reversals(d, budget, {SearchStrategy::Exhaustive, threads}) == one);
    }
  }
}

TEST_CASE("monotone in d and k") {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 60; ++iter) {
    const Digraph d = testing::random_digraph(rng, 4, 7);
    for (std::int64_t target = 2; target <= 4; ++target)
      for (std::int64_t k = 0; k <= 4; ++k) {
        const auto base = solve_k_reversals(d, {target, k});
        if (!base) continue;
        const auto more_k = solve_k_reversals(d, {target, k + 1});
        const auto more_d = solve_k_reversals(d, {target + 1, k});
        REQUIRE(more_k);
        REQUIRE(more_d);
        CHECK(more_k->cost <= base->cost);
        CHECK(more_d->cost <= base->cost);
      }
  }
}

TEST_CASE("already feasible inputs return the empty witness") {
  const auto s = solve_k_reversals(kTriangle, {5, 2});
  REQUIRE(s);
  CHECK(s->witness.empty());
}
