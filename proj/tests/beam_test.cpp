#include <gtest/gtest.h>

#include <deque>
#include <vector>

#include "rectsearch/beam.hpp"
#include "rectsearch/domains/generate.hpp"
#include "rectsearch/domains/random_tree.hpp"
#include "rectsearch/harness/oracle.hpp"

using namespace rectsearch;

namespace {

// Fewest edges from the root to a goal, by plain breadth-first search.
std::uint64_t shallowest_goal(const ExplicitGraph& g) {
  std::deque<std::pair<std::uint32_t, std::uint64_t>> q{{0, 0}};
  while (!q.empty()) {
    auto [n, depth] = q.front();
    q.pop_front();
    if (g.is_goal(n)) return depth;
    for (const auto& e : g.edges(n)) q.push_back({e.to, depth + 1});
  }
  return ~std::uint64_t{0};
}

// Width-1 d-ordered descent written directly: step to the child with the
// smallest d until some child is a goal.
std::vector<std::uint32_t> greedy_descent(const ExplicitGraph& g) {
  std::vector<std::uint32_t> path;
  std::uint32_t cur = 0;
  while (true) {
    const auto& es = g.edges(cur);
    for (const auto& e : es)
      if (g.is_goal(e.to)) {
        path.push_back(e.to);
        return path;
      }
    if (es.empty()) return {};
    std::uint32_t best = es[0].to;
    for (const auto& e : es)
      if (g.d(e.to) < g.d(best)) best = e.to;
    path.push_back(best);
    cur = best;
  }
}

}  // namespace

TEST(Beam, WideBeamIsBreadthFirst) {
  Rng rng(31);
  int solved = 0;
  for (int t = 0; t < 60; ++t) {
    RandomTreeParams p;
    p.goal_probability = 0.05;
    const auto g = random_tree(p, rng);
    auto r = beam_search(g, BeamConfig{100000, Ordering{OrderKey::d}, {}});
    const auto want = shallowest_goal(g);
    if (want == ~std::uint64_t{0}) {
      EXPECT_TRUE(r.trace.events.empty());
      continue;
    }
    ++solved;
    ASSERT_EQ(r.trace.events.size(), 1u);
    EXPECT_EQ(r.plan.size(), want);
    EXPECT_EQ(r.trace.status, TerminalStatus::first_solution);
  }
  EXPECT_GT(solved, 20);
}

TEST(Beam, WidthOneIsGreedyDescent) {
  Rng rng(32);
  for (int t = 0; t < 80; ++t) {
    RandomTreeParams p;
    p.goal_probability = 0.1;
    const auto g = random_tree(p, rng);
    auto r = bead_search(g, 1);
    EXPECT_EQ(r.plan, greedy_descent(g)) << "tree " << t;
  }
}

TEST(Beam, SolutionBehindPrunedNodeIsMissed) {
  for (std::uint32_t width = 1; width <= 5; ++width) {
    ExplicitGraph g;
    const auto root = g.add_node();
    std::uint32_t last = 0;
    for (std::uint32_t i = 0; i <= width; ++i) last = g.add_node(0, 1 + i), g.add_edge(root, last);
    const auto goal = g.add_node(0, 0, true);
    g.add_edge(last, goal);
    auto r = bead_search(g, width);
    EXPECT_TRUE(r.trace.events.empty());
    EXPECT_EQ(r.trace.status, TerminalStatus::exhausted_optimal);
    EXPECT_EQ(r.trace.final_cost(), kInfiniteCost);
    EXPECT_EQ(bead_search(g, width + 1).trace.final_cost(), 2);
  }
}

TEST(Beam, GoalAtStart) {
  ExplicitGraph g;
  g.add_node(0, 0, true);
  auto r = bead_search(g, 3);
  ASSERT_EQ(r.trace.events.size(), 1u);
  EXPECT_EQ(r.trace.events[0].expansions, 0u);
}

TEST(Beam, FOrderedBeamOnTiles) {
  Rng rng(33);
  for (int t = 0; t < 5; ++t) {
    TilesDomain dom(random_tiles(3, 3, rng), TileCost::unit);
    auto r = beam_search(dom, BeamConfig{50, Ordering{OrderKey::f}, {}});
    ASSERT_EQ(r.trace.events.size(), 1u);
    EXPECT_GE(r.plan_cost, oracle_optimal(dom));
    EXPECT_EQ(replay(dom, r.plan)->cost, r.plan_cost);
  }
}

TEST(Cabs, ExhaustionIsOptimalOnTrees) {
  Rng rng(34);
  for (int t = 0; t < 60; ++t) {
    RandomTreeParams p;
    p.goal_probability = 0.05;
    p.max_edge_cost = 5;
    p.h_fraction = 0.5;
    const auto g = random_tree(p, rng);
    auto r = cabs_search(g);
    EXPECT_EQ(r.trace.status, TerminalStatus::exhausted_optimal);
    EXPECT_EQ(r.trace.final_cost(), oracle_optimal(g)) << "tree " << t;
  }
}

TEST(Cabs, ExhaustionIsOptimalOnTiles) {
  Rng rng(35);
  for (int t = 0; t < 4; ++t) {
    const auto inst = random_tiles(3, 3, rng);
    for (auto model : {TileCost::unit, TileCost::sqrt, TileCost::reverse}) {
      TilesDomain dom(inst, model);
      const Cost want = oracle_optimal(dom);
      auto r = cabs_search(dom);
      EXPECT_NEAR(r.trace.final_cost(), want, 1e-9 * want);
      EXPECT_NEAR(replay(dom, r.plan)->cost, want, 1e-9 * want);
    }
  }
}

TEST(Cabs, WidthsDouble) {
  // A chain whose only goal sits behind the fourth-best child of the root
  // needs widths 1, 2, 4 before nothing is left out.
  ExplicitGraph g;
  const auto root = g.add_node();
  std::uint32_t last = 0;
  for (std::uint32_t i = 0; i < 4; ++i) last = g.add_node(0, 1 + i), g.add_edge(root, last);
  const auto goal = g.add_node(0, 0, true);
  g.add_edge(last, goal);
  auto r = cabs_search(g);
  EXPECT_EQ(r.trace.final_cost(), 2);
  EXPECT_EQ(r.stats.iteration_ends.size(), 3u);
  EXPECT_EQ(r.trace.events.size(), 1u);
}
