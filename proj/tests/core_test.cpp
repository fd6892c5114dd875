#include <gtest/gtest.h>

#include <vector>

#include "rectsearch/domains/explicit_graph.hpp"
#include "rectsearch/node.hpp"
#include "rectsearch/ordering.hpp"
#include "rectsearch/trace.hpp"

using namespace rectsearch;

namespace {

using N = NodeOf<ExplicitGraph>;

N node(Cost g, Cost h, float d) {
  N n;
  n.g = g;
  n.h = h;
  n.d = d;
  return n;
}

}  // namespace

TEST(Cost, ComparisonsUseAbsoluteSlack) {
  EXPECT_TRUE(cost_less(1.0, 2.0));
  EXPECT_FALSE(cost_less(1.0, 1.0 + 1e-13));
  EXPECT_TRUE(cost_equal(1.0, 1.0 + 1e-13));
  EXPECT_TRUE(cost_less(5.0, kInfiniteCost));
  EXPECT_FALSE(cost_less(kInfiniteCost, kInfiniteCost));
}

TEST(Ordering, PrimaryThenFThenSequence) {
  // Equal d: lower f wins.
  EXPECT_TRUE(std::is_lt(compare(node(1, 2, 3), 7, node(1, 3, 3), 2, Ordering{OrderKey::d})));
  // Equal d and f: earlier insertion wins.
  EXPECT_TRUE(std::is_lt(compare(node(1, 2, 3), 2, node(2, 1, 3), 5, Ordering{OrderKey::d})));
  EXPECT_TRUE(std::is_gt(compare(node(1, 2, 3), 9, node(2, 1, 3), 5, Ordering{OrderKey::d})));
  // Primary key decides first.
  EXPECT_TRUE(std::is_lt(compare(node(9, 9, 1), 9, node(0, 0, 2), 0, Ordering{OrderKey::d})));
  EXPECT_TRUE(std::is_lt(compare(node(0, 5, 9), 9, node(0, 6, 0), 0, Ordering{OrderKey::h})));
  EXPECT_TRUE(std::is_lt(compare(node(1, 1, 9), 9, node(0, 3, 0), 0, Ordering{OrderKey::f})));
}

TEST(Ordering, NodeIsNotBeforeItself) {
  const N a = node(1, 2, 3);
  EXPECT_TRUE(std::is_eq(compare(a, 4, a, 4, Ordering{OrderKey::d})));
}

TEST(NodeQueue, PopsInOrderingOrder) {
  NodePool<N> pool;
  std::vector<N> nodes = {node(0, 5, 2), node(0, 1, 2), node(0, 0, 1), node(1, 0, 2), node(0, 0, 9)};
  NodeQueue q;
  for (const auto& n : nodes) {
    const NodeId id = pool.add(n);
    q.push(make_entry(pool[id], id, Ordering{OrderKey::d}));
  }
  std::vector<NodeId> order;
  while (!q.empty()) order.push_back(q.pop().id);
  // d=1 first; among d=2: f=1 (ids 1 and 3, id 1 first), then f=5; d=9 last.
  EXPECT_EQ(order, (std::vector<NodeId>{2, 1, 3, 0, 4}));
}

TEST(NodePool, ReferencesSurviveGrowth) {
  NodePool<N> pool;
  const NodeId first = pool.add(node(1, 2, 3));
  const N* p = &pool[first];
  for (int i = 0; i < 200000; ++i) pool.add(node(i, 0, 0));
  EXPECT_EQ(p, &pool[first]);
  EXPECT_EQ(pool[first].g, 1);
  EXPECT_EQ(pool[150000].g, 149999);
}

TEST(Paths, ReconstructAndReplayAgree) {
  ExplicitGraph g;
  const auto r = g.add_node(), a = g.add_node(), b = g.add_node(0, 0, true);
  g.add_edge(r, a, 2.5);
  g.add_edge(a, b, 1.25);
  NodePool<N> pool;
  const NodeId root = pool.add(make_root(g));
  auto kids = expand(g, pool[root], root);
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0].depth, 1u);
  EXPECT_DOUBLE_EQ(kids[0].g, 2.5);
  const NodeId ida = pool.add(kids[0]);
  auto kids2 = expand(g, pool[ida], ida);
  const NodeId idb = pool.add(kids2.at(0));
  const auto path = reconstruct_path(pool, idb);
  EXPECT_EQ(path.actions, (std::vector<std::uint32_t>{a, b}));
  EXPECT_DOUBLE_EQ(path.cost, 3.75);
  const auto rep = replay(g, path.actions);
  ASSERT_TRUE(rep);
  EXPECT_TRUE(g.is_goal(rep->state));
  EXPECT_DOUBLE_EQ(rep->cost, path.cost);
  EXPECT_FALSE(replay(g, {b}));
}

TEST(Paths, RootPathIsEmpty) {
  ExplicitGraph g;
  g.add_node(0, 0, true);
  NodePool<N> pool;
  const NodeId root = pool.add(make_root(g));
  const auto path = reconstruct_path(pool, root);
  EXPECT_TRUE(path.actions.empty());
  EXPECT_EQ(path.cost, 0);
}

TEST(Generate, RejectsNonPositiveEdgeCosts) {
  ExplicitGraph g;
  const auto r = g.add_node(), a = g.add_node();
  g.add_edge(r, a, 0);
  std::vector<SuccessorOf<ExplicitGraph>> out;
  EXPECT_THROW(generate(g, r, out), NonPositiveEdgeCost);
}

TEST(RunMonitor, ExpansionLimitStopsBeforeTheExtraExpansion) {
  RunMonitor m(Limits{.expansions = 3});
  EXPECT_TRUE(m.begin_expansion());
  EXPECT_TRUE(m.begin_expansion());
  EXPECT_TRUE(m.begin_expansion());
  EXPECT_FALSE(m.begin_expansion());
  EXPECT_TRUE(m.stopped());
  const auto t = m.finish(TerminalStatus::exhausted_optimal);
  EXPECT_EQ(t.status, TerminalStatus::expansion_limit);
  EXPECT_EQ(t.total_expansions, 3u);
}

TEST(RunMonitor, MemoryLimitCountsNodes) {
  RunMonitor m(Limits{.memory_bytes = 1000}, 100);
  m.add_nodes(10);
  EXPECT_FALSE(m.stopped());
  m.add_nodes(1);
  EXPECT_TRUE(m.stopped());
  EXPECT_EQ(m.finish(TerminalStatus::exhausted_optimal).status, TerminalStatus::memory_limit);
}

TEST(RunMonitor, TimeLimitIsHonoured) {
  RunMonitor m(Limits{.time_ms = 0.0});
  EXPECT_FALSE(m.begin_expansion());
  EXPECT_EQ(m.finish(TerminalStatus::exhausted_optimal).status, TerminalStatus::time_limit);
}

TEST(RunMonitor, EventsMustStrictlyImprove) {
  RunMonitor m;
  m.report_incumbent(10);
  m.report_incumbent(9);
  EXPECT_THROW(m.report_incumbent(9), std::logic_error);
  const auto t = m.finish(TerminalStatus::exhausted_optimal);
  ASSERT_EQ(t.events.size(), 2u);
  EXPECT_EQ(t.final_cost(), 9);
  EXPECT_EQ(t.cost_at_expansions(0), 9);
}

TEST(Trace, StatusNamesRoundTrip) {
  for (auto s : {TerminalStatus::exhausted_optimal, TerminalStatus::first_solution,
                 TerminalStatus::time_limit, TerminalStatus::memory_limit,
                 TerminalStatus::expansion_limit, TerminalStatus::iteration_limit})
    EXPECT_EQ(parse_terminal_status(to_string(s)), s);
  EXPECT_THROW(parse_terminal_status("bogus"), std::invalid_argument);
}
