#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "rectsearch/aees.hpp"
#include "rectsearch/best_first.hpp"
#include "rectsearch/domains/generate.hpp"
#include "rectsearch/domains/random_tree.hpp"
#include "rectsearch/harness/oracle.hpp"

using namespace rectsearch;

namespace {

std::vector<TilesInstance> tiles_set(std::uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<TilesInstance> out;
  for (int i = 0; i < n; ++i) out.push_back(random_tiles(3, 3, rng));
  return out;
}

void expect_decreasing(const AnytimeTrace& t) {
  for (std::size_t i = 1; i < t.events.size(); ++i) EXPECT_LT(t.events[i].cost, t.events[i - 1].cost);
}

// Path 0 -> 1 -> ... -> n (goal) with a dead-end side branch at every
// node. h and d are exact everywhere.
ExplicitGraph chain_with_decoys(std::uint32_t n) {
  ExplicitGraph g;
  for (std::uint32_t i = 0; i <= n; ++i) g.add_node(n - i, n - i, i == n);
  for (std::uint32_t i = 0; i < n; ++i) {
    g.add_edge(i, i + 1);
    const auto decoy = g.add_node(kInfiniteCost, 1e6);
    g.add_edge(i, decoy);
  }
  return g;
}

}  // namespace

TEST(AStar, OptimalOnTiles) {
  for (const auto& inst : tiles_set(41, 8))
    for (auto model : {TileCost::unit, TileCost::heavy, TileCost::sqrt, TileCost::inverse,
                       TileCost::reverse, TileCost::reverse_inverse}) {
      TilesDomain dom(inst, model);
      const Cost want = oracle_optimal(dom);
      auto r = wastar_search(dom, 1);
      EXPECT_EQ(r.trace.status, TerminalStatus::first_solution);
      EXPECT_NEAR(r.trace.final_cost(), want, 1e-9 * want) << to_string(model);
    }
}

TEST(AStar, GoalAtStart) {
  ExplicitGraph g;
  g.add_node(0, 0, true);
  auto r = wastar_search(g, 1);
  ASSERT_EQ(r.trace.events.size(), 1u);
  EXPECT_EQ(r.trace.events[0].cost, 0);
  EXPECT_EQ(r.trace.total_expansions, 0u);
}

TEST(AStar, UnsolvableExhausts) {
  ExplicitGraph g;
  g.add_node();
  g.add_node();
  g.add_edge(0, 1);
  auto r = wastar_search(g, 1);
  EXPECT_TRUE(r.trace.events.empty());
  EXPECT_EQ(r.trace.status, TerminalStatus::exhausted_optimal);
}

TEST(WeightedAStar, BoundedSuboptimality) {
  for (const auto& inst : tiles_set(42, 8))
    for (auto model : {TileCost::unit, TileCost::heavy, TileCost::inverse}) {
      TilesDomain dom(inst, model);
      const Cost opt = oracle_optimal(dom);
      for (double w : {1.5, 2.0, 3.0}) {
        auto r = wastar_search(dom, w);
        EXPECT_LE(r.trace.final_cost(), w * opt * (1 + 1e-9));
        EXPECT_NEAR(replay(dom, r.plan)->cost, r.plan_cost, 1e-9);
      }
    }
  Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    PancakeDomain dom(random_pancake(7, rng), PancakeCost::heavy);
    const Cost opt = oracle_optimal(dom);
    for (double w : {1.5, 2.0, 3.0}) EXPECT_LE(wastar_search(dom, w).trace.final_cost(), w * opt);
  }
}

TEST(WeightedAStar, RejectsWeightBelowOne) {
  ExplicitGraph g;
  g.add_node(0, 0, true);
  EXPECT_THROW(wastar_search(g, 0.5), std::invalid_argument);
  EXPECT_THROW(awastar_search(g, 0.9), std::invalid_argument);
}

TEST(Gbfs, FollowsHeuristicNotCost) {
  // Cheap branch has high h, expensive branch has h = 0 all the way.
  ExplicitGraph g;
  const auto s = g.add_node(1);
  const auto cheap = g.add_node(5);
  const auto dear = g.add_node(0);
  const auto goal = g.add_node(0, 0, true);
  g.add_edge(s, cheap, 1);
  g.add_edge(s, dear, 10);
  g.add_edge(cheap, goal, 1);
  g.add_edge(dear, goal, 10);
  EXPECT_EQ(gbfs_search(g).trace.final_cost(), 20);
  EXPECT_EQ(wastar_search(g, 1).trace.final_cost(), 2);
}

TEST(AnytimeWeightedAStar, WeightOneGivesOneEvent) {
  for (const auto& inst : tiles_set(44, 6)) {
    TilesDomain dom(inst, TileCost::heavy);
    auto r = awastar_search(dom, 1);
    ASSERT_EQ(r.trace.events.size(), 1u);
    EXPECT_EQ(r.trace.final_cost(), oracle_optimal(dom));
    EXPECT_EQ(r.trace.status, TerminalStatus::exhausted_optimal);
  }
}

TEST(AnytimeWeightedAStar, ConvergesToOptimal) {
  for (const auto& inst : tiles_set(45, 8))
    for (auto model : {TileCost::unit, TileCost::inverse, TileCost::reverse}) {
      TilesDomain dom(inst, model);
      const Cost opt = oracle_optimal(dom);
      auto r = awastar_search(dom, 3);
      ASSERT_FALSE(r.trace.events.empty());
      EXPECT_LE(r.trace.events.front().cost, 3 * opt * (1 + 1e-9));
      EXPECT_NEAR(r.trace.final_cost(), opt, 1e-9 * opt);
      expect_decreasing(r.trace);
    }
}

TEST(WeightSchedule, Validation) {
  EXPECT_THROW(WeightSchedule::list({}), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::list({2, 3, 1}), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::list({3, 2}), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::list({3, 0.5, 1}), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::decrement(0.5, 0.1), std::invalid_argument);
  EXPECT_THROW(WeightSchedule::decrement(2, 0), std::invalid_argument);
}

TEST(WeightSchedule, DecrementSteps) {
  const auto s = WeightSchedule::decrement(2.5, 0.02);
  EXPECT_DOUBLE_EQ(s.weight(0), 2.5);
  EXPECT_DOUBLE_EQ(s.weight(1), 2.48);
  EXPECT_DOUBLE_EQ(s.weight(10), 2.3);
  EXPECT_DOUBLE_EQ(s.weight(75), 1.0);
  EXPECT_DOUBLE_EQ(s.weight(1000), 1.0);
  const auto l = WeightSchedule::list({5, 3, 2, 1.5, 1});
  EXPECT_EQ(l.weight(0), 5);
  EXPECT_EQ(l.weight(3), 1.5);
  EXPECT_EQ(l.weight(9), 1);
}

TEST(Arastar, ScheduleOfOneIsAStar) {
  for (const auto& inst : tiles_set(46, 5)) {
    TilesDomain dom(inst, TileCost::unit);
    auto r = arastar_search(dom, WeightSchedule::list({1}));
    ASSERT_EQ(r.trace.events.size(), 1u);
    EXPECT_EQ(r.trace.final_cost(), oracle_optimal(dom));
  }
}

TEST(Arastar, SchedulesConvergeToOptimal) {
  const std::vector<WeightSchedule> schedules{WeightSchedule::list({5, 3, 2, 1.5, 1}),
                                              WeightSchedule::decrement(10, 0.02),
                                              WeightSchedule::decrement(2.5, 0.02)};
  for (const auto& inst : tiles_set(47, 6))
    for (auto model : {TileCost::unit, TileCost::heavy, TileCost::sqrt}) {
      TilesDomain dom(inst, model);
      const Cost opt = oracle_optimal(dom);
      for (const auto& s : schedules) {
        auto r = arastar_search(dom, s);
        EXPECT_NEAR(r.trace.final_cost(), opt, 1e-9 * opt);
        expect_decreasing(r.trace);
        for (std::size_t i = 1; i < r.stats.weights.size(); ++i)
          EXPECT_LE(r.stats.weights[i], r.stats.weights[i - 1]);
      }
    }
}

TEST(Aees, PerfectEstimatesFollowThePath) {
  const auto g = chain_with_decoys(12);
  auto r = aees_search(g);
  EXPECT_EQ(r.trace.final_cost(), 12);
  EXPECT_EQ(r.trace.total_expansions, 12u);
  ASSERT_EQ(r.trace.events.size(), 1u);
}

TEST(Aees, ExhaustionIsOptimal) {
  for (const auto& inst : tiles_set(48, 6))
    for (auto model : {TileCost::unit, TileCost::heavy, TileCost::inverse,
                       TileCost::reverse_inverse}) {
      TilesDomain dom(inst, model);
      const Cost opt = oracle_optimal(dom);
      auto r = aees_search(dom);
      EXPECT_EQ(r.trace.status, TerminalStatus::exhausted_optimal);
      EXPECT_NEAR(r.trace.final_cost(), opt, 1e-9 * opt);
      expect_decreasing(r.trace);
    }
  Rng rng(49);
  for (int t = 0; t < 40; ++t) {
    RandomTreeParams p;
    p.goal_probability = 0.05;
    p.max_edge_cost = 5;
    p.h_fraction = 0.6;
    const auto g = random_tree(p, rng);
    EXPECT_EQ(aees_search(g).trace.final_cost(), oracle_optimal(g));
  }
}

TEST(Aees, LowerBoundNeverDecreasesOnUnitTiles) {
  for (const auto& inst : tiles_set(50, 6)) {
    TilesDomain dom(inst, TileCost::unit);
    std::vector<Cost> bounds;
    AeesSearch<TilesDomain>(dom, {}, &bounds).run();
    ASSERT_FALSE(bounds.empty());
    for (std::size_t i = 1; i < bounds.size(); ++i) EXPECT_GE(bounds[i], bounds[i - 1]);
  }
}

TEST(BestFirst, ExpansionLimit) {
  Rng rng(51);
  TilesDomain dom(random_tiles(4, 4, rng), TileCost::unit);
  Limits lim;
  lim.expansions = 500;
  EXPECT_EQ(awastar_search(dom, 1, lim).trace.status, TerminalStatus::expansion_limit);
  EXPECT_EQ(aees_search(dom, lim).trace.total_expansions, 500u);
}
