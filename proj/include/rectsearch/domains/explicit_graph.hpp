#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectsearch/domain.hpp"

namespace rectsearch {

// A small graph given node by node. Node 0 is the start unless changed.
// Actions are target node ids.
class ExplicitGraph {
 public:
  using State = std::uint32_t;
  using Action = std::uint32_t;
  using Key = std::uint32_t;

  struct Edge {
    std::uint32_t to;
    Cost cost;
  };

  std::uint32_t add_node(Cost h = 0, double d = 0, bool goal = false,
                         std::string label = {}) {
    nodes_.push_back({h, d, goal, std::move(label), {}});
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }
  void add_edge(std::uint32_t from, std::uint32_t to, Cost cost = 1) {
    if (from >= nodes_.size() || to >= nodes_.size())
      throw std::out_of_range("edge endpoint out of range");
    nodes_[from].edges.push_back({to, cost});
  }
  void set_start(std::uint32_t s) { start_ = s; }
  void set_goal(std::uint32_t n, bool goal = true) { nodes_.at(n).goal = goal; }
  void set_h(std::uint32_t n, Cost h) { nodes_.at(n).h = h; }
  void set_d(std::uint32_t n, double d) { nodes_.at(n).d = d; }

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::string& label(std::uint32_t n) const { return nodes_.at(n).label; }
  const std::vector<Edge>& edges(std::uint32_t n) const { return nodes_.at(n).edges; }

  State initial_state() const { return start_; }
  void successors(const State& s, std::vector<Successor<State, Action>>& out) const {
    for (const auto& e : nodes_[s].edges)
      out.push_back({e.to, e.to, e.cost, nodes_[e.to].h, nodes_[e.to].d});
  }
  bool is_goal(const State& s) const { return nodes_[s].goal; }
  Cost h(const State& s) const { return nodes_[s].h; }
  double d(const State& s) const { return nodes_[s].d; }
  Key key(const State& s) const { return s; }

 private:
  struct Vertex {
    Cost h;
    double d;
    bool goal;
    std::string label;
    std::vector<Edge> edges;
  };
  std::vector<Vertex> nodes_;
  State start_ = 0;
};

}  // namespace rectsearch
