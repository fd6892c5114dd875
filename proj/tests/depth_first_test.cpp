#include <gtest/gtest.h>

#include <vector>

#include "rectsearch/depth_first.hpp"
#include "rectsearch/domains/generate.hpp"
#include "rectsearch/domains/random_tree.hpp"
#include "rectsearch/harness/oracle.hpp"

using namespace rectsearch;

namespace {

// Complete binary tree of the given depth. The left child always has the
// smaller d; the goal is the node reached by the move sequence `route`
// (true = right child). Returns the graph; node 0 is the root.
ExplicitGraph binary_tree_with_goal(std::uint32_t depth, const std::vector<bool>& route) {
  ExplicitGraph g;
  g.add_node(0, depth);
  std::vector<std::uint32_t> frontier{0};
  std::uint32_t goal_node = 0;
  std::vector<std::vector<bool>> routes{{}};
  for (std::uint32_t level = 1; level <= depth; ++level) {
    std::vector<std::uint32_t> next;
    std::vector<std::vector<bool>> next_routes;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (bool right : {false, true}) {
        auto r = routes[i];
        r.push_back(right);
        const auto n = g.add_node(0, right ? 10.0 + depth - level : depth - level);
        g.add_edge(frontier[i], n);
        if (r == route) goal_node = n;
        next.push_back(n);
        next_routes.push_back(r);
      }
    }
    frontier.swap(next);
    routes.swap(next_routes);
  }
  g.set_goal(goal_node);
  g.set_d(goal_node, 0);
  return g;
}

}  // namespace

TEST(DfsStar, GoalAtStart) {
  ExplicitGraph g;
  g.add_node(0, 0, true);
  auto r = dfs_star_search(g);
  ASSERT_EQ(r.trace.events.size(), 1u);
  EXPECT_EQ(r.trace.events[0].cost, 0);
}

TEST(DfsStar, BoundDoublesUntilFirstSolution) {
  // h(start) = 5 and the only solution costs 23.
  ExplicitGraph g;
  const auto s = g.add_node(5);
  const auto a = g.add_node();
  const auto b = g.add_node();
  const auto goal = g.add_node(0, 0, true);
  g.add_edge(s, a, 10);
  g.add_edge(a, b, 10);
  g.add_edge(b, goal, 3);
  for (bool order : {false, true}) {
    auto r = dfs_star_search(g, DfsStarConfig{order, {}});
    EXPECT_EQ(r.stats.bounds, (std::vector<Cost>{5, 10, 20, 40, kInfiniteCost}));
    EXPECT_EQ(r.trace.final_cost(), 23);
  }
}

TEST(DfsStar, ZeroHeuristicStartsAtCheapestEdge) {
  ExplicitGraph g;
  const auto s = g.add_node();
  const auto a = g.add_node();
  const auto goal = g.add_node(0, 0, true);
  g.add_edge(s, a, 3);
  g.add_edge(s, goal, 7);
  g.add_edge(a, goal, 1);
  auto r = dfs_star_search(g);
  ASSERT_FALSE(r.stats.bounds.empty());
  EXPECT_EQ(r.stats.bounds[0], 3);
  EXPECT_EQ(r.trace.final_cost(), 4);
}

TEST(DfsStar, ExhaustionIsOptimalOnPancakes) {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const auto inst = random_pancake(6, rng);
    for (auto model : {PancakeCost::unit, PancakeCost::heavy}) {
      PancakeDomain dom(inst, model);
      const Cost opt = oracle_optimal(dom);
      for (bool order : {false, true}) {
        auto r = dfs_star_search(dom, DfsStarConfig{order, {}});
        EXPECT_EQ(r.trace.status, TerminalStatus::exhausted_optimal);
        EXPECT_EQ(r.trace.final_cost(), opt);
        EXPECT_EQ(replay(dom, r.plan)->cost, opt);
      }
    }
  }
}

TEST(DfsStar, ExhaustionIsOptimalOnTrees) {
  Rng rng(62);
  for (int t = 0; t < 60; ++t) {
    RandomTreeParams p;
    p.goal_probability = 0.05;
    p.max_edge_cost = 5;
    p.h_fraction = 0.5;
    const auto g = random_tree(p, rng);
    for (bool order : {false, true})
      EXPECT_EQ(dfs_star_search(g, DfsStarConfig{order, {}}).trace.final_cost(), oracle_optimal(g));
  }
}

TEST(DfsStar, CyclesAreCut) {
  ExplicitGraph g;
  const auto s = g.add_node(1);
  const auto a = g.add_node(1);
  const auto goal = g.add_node(0, 0, true);
  g.add_edge(s, a);
  g.add_edge(a, s);
  g.add_edge(a, goal, 5);
  EXPECT_EQ(dfs_star_search(g).trace.final_cost(), 6);
}

TEST(IldsStar, GoalNeedsTwoDiscrepancies) {
  const auto g = binary_tree_with_goal(4, {true, false, true, false});
  auto r = ilds_star_search(g);
  ASSERT_EQ(r.trace.events.size(), 1u);
  EXPECT_EQ(r.trace.final_cost(), 4);
  ASSERT_GE(r.stats.iteration_ends.size(), 3u);
  // One depth bound (d(start) = 4), sweeps k = 0, 1, 2, ...
  EXPECT_EQ(r.stats.bounds.front(), 4);
  const auto at = r.trace.events[0].expansions;
  EXPECT_GT(at, r.stats.iteration_ends[1]);
  EXPECT_LE(at, r.stats.iteration_ends[2]);
}

TEST(IldsStar, ZeroDiscrepancySweepIsGreedy) {
  const auto g = binary_tree_with_goal(5, {false, false, false, false, true});
  auto r = ilds_star_search(g);
  ASSERT_FALSE(r.trace.events.empty());
  // The goal hangs off the greedy path, so it is generated in sweep 0
  // after expanding the four greedy ancestors plus the root.
  EXPECT_EQ(r.trace.events[0].expansions, 5u);
  EXPECT_LE(r.trace.events[0].expansions, r.stats.iteration_ends[0]);
}

TEST(IldsStar, DiscrepancyAudit) {
  Rng rng(63);
  for (int t = 0; t < 30; ++t) {
    RandomTreeParams p;
    p.goal_probability = 0.04;
    p.max_edge_cost = 3;
    const auto g = random_tree(p, rng);
    IldsStar<ExplicitGraph>::Audit audit;
    IldsStar<ExplicitGraph>(g, {}, &audit).run();
    for (auto [k, used] : audit) EXPECT_LE(used, k);
  }
}

TEST(IldsStar, ExhaustionIsOptimal) {
  Rng rng(64);
  for (int t = 0; t < 60; ++t) {
    RandomTreeParams p;
    p.goal_probability = 0.05;
    p.max_edge_cost = 5;
    p.h_fraction = 0.5;
    const auto g = random_tree(p, rng);
    EXPECT_EQ(ilds_star_search(g).trace.final_cost(), oracle_optimal(g)) << "tree " << t;
  }
  for (int t = 0; t < 3; ++t) {
    TilesDomain dom(random_tiles(3, 3, rng), TileCost::unit);
    EXPECT_EQ(ilds_star_search(dom).trace.final_cost(), oracle_optimal(dom));
  }
}
