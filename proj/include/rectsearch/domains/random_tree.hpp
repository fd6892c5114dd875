#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "rectsearch/domains/explicit_graph.hpp"
#include "rectsearch/domains/generate.hpp"

namespace rectsearch {

struct RandomTreeParams {
  std::uint32_t max_branching = 4;
  std::uint32_t max_depth = 12;
  std::uint32_t max_nodes = 4000;
  double goal_probability = 0.0;  // chance that a non-root node is a goal
  std::uint32_t max_edge_cost = 1;  // edge costs uniform in [1, max_edge_cost]
  double h_fraction = 0.0;  // h = floor(fraction * cost to the nearest goal below)
};

// Random tree as an explicit graph (node 0 is the root). Every state has
// one parent, so the tree is duplicate free. Branching is uniform in
// [0, max_branching] below the root, which always has at least one child.
// d values are distinct integers; goals have d = 0 and no children.
inline ExplicitGraph random_tree(const RandomTreeParams& p, Rng& rng) {
  ExplicitGraph g;
  std::vector<std::uint32_t> depth{0};
  g.add_node();
  for (std::uint32_t i = 0; i < g.size() && g.size() < p.max_nodes; ++i) {
    if (g.is_goal(i) || depth[i] >= p.max_depth) continue;
    std::uint64_t kids = below(rng, p.max_branching + 1);
    if (i == 0 && kids == 0) kids = 1;
    for (std::uint64_t c = 0; c < kids && g.size() < p.max_nodes; ++c) {
      const bool goal = below(rng, 1'000'000) < p.goal_probability * 1'000'000;
      const std::uint32_t n = g.add_node(0, 0, goal);
      g.add_edge(i, n, static_cast<Cost>(1 + below(rng, p.max_edge_cost)));
      depth.push_back(depth[i] + 1);
    }
  }
  // Distinct d values in a random order.
  std::vector<std::uint32_t> ds(g.size());
  for (std::uint32_t i = 0; i < ds.size(); ++i) ds[i] = i + 1;
  shuffle(ds, rng);
  // Cost to the nearest goal in each subtree; children have larger ids.
  std::vector<Cost> below_cost(g.size(), kInfiniteCost);
  for (std::uint32_t i = static_cast<std::uint32_t>(g.size()); i-- > 0;) {
    if (g.is_goal(i)) {
      below_cost[i] = 0;
      continue;
    }
    for (const auto& e : g.edges(i)) below_cost[i] = std::min(below_cost[i], e.cost + below_cost[e.to]);
  }
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    g.set_d(i, g.is_goal(i) ? 0.0 : static_cast<double>(ds[i]));
    if (below_cost[i] < kInfiniteCost) g.set_h(i, std::floor(p.h_fraction * below_cost[i]));
  }
  return g;
}

}  // namespace rectsearch
