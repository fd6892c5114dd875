#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rectsearch/domain.hpp"

namespace rectsearch {

struct TreeNode {
  std::uint32_t depth = 0;
  std::uint64_t index = 0;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
  template <class H>
  friend H AbslHashValue(H h, const TreeNode& n) {
    return H::combine(std::move(h), n.depth, n.index);
  }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform tree generated on demand: every node above max_depth has
// `branching` children, edges cost 1, h is 0 and d is a pseudo-random
// integer in [1, 1000] fixed by the seed. Optionally one node gets an
// extra child that is the only goal.
class ImplicitTree {
 public:
  using State = TreeNode;
  using Action = std::uint8_t;
  using Key = TreeNode;

  ImplicitTree(std::uint32_t branching, std::uint32_t max_depth, std::uint64_t seed)
      : branching_(branching), max_depth_(max_depth), seed_(seed) {}

  void set_goal_parent(TreeNode parent) { goal_parent_ = parent; }

  static TreeNode child_of(TreeNode n, std::uint32_t branching, std::uint32_t c) {
    return {n.depth + 1, n.index * (branching + 1) + c};
  }
  TreeNode child(TreeNode n, std::uint32_t c) const { return child_of(n, branching_, c); }

  State initial_state() const { return {}; }
  void successors(const State& s, std::vector<Successor<State, Action>>& out) const {
    if (s.depth >= max_depth_ || is_goal(s)) return;
    for (std::uint32_t c = 0; c < branching_; ++c) {
      TreeNode n = child(s, c);
      out.push_back({n, static_cast<Action>(c), 1.0, 0.0, d(n)});
    }
    if (goal_parent_ && *goal_parent_ == s) {
      TreeNode g = child(s, branching_);
      out.push_back({g, static_cast<Action>(branching_), 1.0, 0.0, 0.0});
    }
  }
  bool is_goal(const State& s) const {
    return goal_parent_ && s.depth == goal_parent_->depth + 1 &&
           s == child(*goal_parent_, branching_);
  }
  Cost h(const State&) const { return 0; }
  double d(const State& s) const {
    if (is_goal(s)) return 0;
    return static_cast<double>(1 + splitmix64(seed_ ^ splitmix64(s.index * 64 + s.depth)) % 1000);
  }
  Key key(const State& s) const { return s; }

 private:
  std::uint32_t branching_;
  std::uint32_t max_depth_;
  std::uint64_t seed_;
  std::optional<TreeNode> goal_parent_;
};

}  // namespace rectsearch
