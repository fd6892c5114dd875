#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectsearch/domain.hpp"

namespace rectsearch {

enum class PancakeCost { unit, heavy };

inline std::string_view to_string(PancakeCost c) { return c == PancakeCost::unit ? "unit" : "heavy"; }

inline PancakeCost parse_pancake_cost(std::string_view s) {
  if (s == "unit") return PancakeCost::unit;
  if (s == "heavy") return PancakeCost::heavy;
  throw std::invalid_argument("unknown pancake cost model: " + std::string(s));
}

// stack[0] is the top pancake; pancakes are numbered 1..N and the goal
// is 1..N from top to bottom.
struct PancakeInstance {
  std::vector<int> stack;
};

// Flip k reverses the top k pancakes (k = 2..N). Under heavy costs the
// flip costs the id of the k-th pancake from the top. The gap heuristic
// counts adjacent pairs that differ by more than one, with a plate N+1
// under the stack; the heavy version charges each gap the smaller id.
class PancakeDomain {
 public:
  using State = std::string;  // one byte per pancake
  using Action = std::uint8_t;  // flip size
  using Key = std::string;

  PancakeDomain(const PancakeInstance& inst, PancakeCost cost) : model_(cost) {
    n_ = static_cast<int>(inst.stack.size());
    if (n_ < 2 || n_ > 250) throw std::invalid_argument("pancake stack must have 2..250 pancakes");
    std::vector<bool> seen(n_ + 1, false);
    for (int p : inst.stack) {
      if (p < 1 || p > n_ || seen[p]) throw std::invalid_argument("pancakes are not a permutation of 1..N");
      seen[p] = true;
    }
    for (int p : inst.stack) initial_.push_back(static_cast<char>(p));
    for (int p = 1; p <= n_; ++p) goal_.push_back(static_cast<char>(p));
  }

  static int at(const State& s, int i) { return static_cast<unsigned char>(s[i]); }

  int size() const noexcept { return n_; }
  PancakeCost cost_model() const noexcept { return model_; }

  Cost flip_cost(const State& s, int k) const {
    return model_ == PancakeCost::unit ? 1.0 : static_cast<Cost>(at(s, k - 1));
  }

  State initial_state() const { return initial_; }

  void successors(const State& s, std::vector<Successor<State, Action>>& out) const {
    for (int k = 2; k <= n_; ++k) {
      State t = s;
      std::reverse(t.begin(), t.begin() + k);
      const Cost h_t = h(t);
      const double d_t = d(t);
      out.push_back({std::move(t), static_cast<Action>(k), flip_cost(s, k), h_t, d_t});
    }
  }

  bool is_goal(const State& s) const { return s == goal_; }

  Cost h(const State& s) const {
    Cost sum = 0;
    for (int i = 0; i < n_; ++i) {
      const int a = at(s, i), b = i + 1 < n_ ? at(s, i + 1) : n_ + 1;
      if (std::abs(a - b) > 1) sum += model_ == PancakeCost::unit ? 1 : std::min(a, b);
    }
    return sum;
  }

  double d(const State& s) const {
    int gaps = 0;
    for (int i = 0; i < n_; ++i) {
      const int a = at(s, i), b = i + 1 < n_ ? at(s, i + 1) : n_ + 1;
      if (std::abs(a - b) > 1) ++gaps;
    }
    return gaps;
  }

  Key key(const State& s) const { return s; }

 private:
  int n_ = 0;
  PancakeCost model_;
  State initial_;
  State goal_;
};

}  // namespace rectsearch
