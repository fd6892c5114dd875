#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectsearch/domain.hpp"

namespace rectsearch {

enum class BlocksVariant { standard, deep };

inline std::string_view to_string(BlocksVariant v) {
  return v == BlocksVariant::standard ? "standard" : "deep";
}

inline BlocksVariant parse_blocks_variant(std::string_view s) {
  if (s == "standard") return BlocksVariant::standard;
  if (s == "deep") return BlocksVariant::deep;
  throw std::invalid_argument("unknown blocks variant: " + std::string(s));
}

// on[b] is the block that b rests on, or -1 for the table.
struct BlocksInstance {
  std::vector<int> initial_on;
  std::vector<int> goal_on;
};

struct BlocksAction {
  std::uint8_t block = 0;
  std::uint8_t dest = 0;  // a block, table (N) or the hand (N + 1)

  friend bool operator==(const BlocksAction&, const BlocksAction&) = default;
};

// Standard: move a clear block onto the table or another clear block.
// Deep: pick up a clear block into an empty hand, put the held block down.
// h counts blocks not resting on a correct tower; each needs one move
// (two actions in deep, one for a block already in the hand).
class BlocksDomain {
 public:
  using State = std::string;  // byte b: what block b rests on
  using Action = BlocksAction;
  using Key = std::string;

  BlocksDomain(const BlocksInstance& inst, BlocksVariant variant) : variant_(variant) {
    n_ = static_cast<int>(inst.initial_on.size());
    if (n_ < 1 || n_ > 250) throw std::invalid_argument("blocks world needs 1..250 blocks");
    if (static_cast<int>(inst.goal_on.size()) != n_)
      throw std::invalid_argument("initial and goal configurations differ in size");
    validate(inst.initial_on);
    validate(inst.goal_on);
    initial_ = encode(inst.initial_on);
    goal_ = encode(inst.goal_on);
  }

  int blocks() const noexcept { return n_; }
  int table() const noexcept { return n_; }
  int hand() const noexcept { return n_ + 1; }
  BlocksVariant variant() const noexcept { return variant_; }

  // Rejects out-of-range supports, two blocks on one, and cycles.
  static void validate(const std::vector<int>& on) {
    const int n = static_cast<int>(on.size());
    std::vector<int> above(n, 0);
    for (int b = 0; b < n; ++b) {
      if (on[b] < -1 || on[b] >= n || on[b] == b)
        throw std::invalid_argument("block " + std::to_string(b) + " has an invalid support");
      if (on[b] >= 0 && ++above[on[b]] > 1)
        throw std::invalid_argument("two blocks rest on block " + std::to_string(on[b]));
    }
    for (int b = 0; b < n; ++b) {
      int cur = b;
      for (int steps = 0; on[cur] != -1; ++steps) {
        if (steps > n) throw std::invalid_argument("blocks configuration has a cycle");
        cur = on[cur];
      }
    }
  }

  State encode(const std::vector<int>& on) const {
    State s(n_, 0);
    for (int b = 0; b < n_; ++b) s[b] = static_cast<char>(on[b] < 0 ? n_ : on[b]);
    return s;
  }
  static int support(const State& s, int b) { return static_cast<unsigned char>(s[b]); }

  State initial_state() const { return initial_; }

  void successors(const State& s, std::vector<Successor<State, Action>>& out) const {
    std::vector<bool> clear(n_, true);
    int held = -1;
    for (int b = 0; b < n_; ++b) {
      const int on = support(s, b);
      if (on < n_) clear[on] = false;
      if (on == hand()) held = b;
    }
    auto emit = [&](int b, int dest) {
      State t = s;
      t[b] = static_cast<char>(dest);
      const Cost ht = h(t);
      out.push_back({std::move(t), {static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(dest)}, 1.0,
                     ht, ht});
    };
    if (variant_ == BlocksVariant::standard) {
      for (int b = 0; b < n_; ++b) {
        if (!clear[b]) continue;
        if (support(s, b) != table()) emit(b, table());
        for (int c = 0; c < n_; ++c)
          if (c != b && clear[c] && support(s, b) != c) emit(b, c);
      }
      return;
    }
    if (held < 0) {
      for (int b = 0; b < n_; ++b)
        if (clear[b]) emit(b, hand());
      return;
    }
    emit(held, table());
    for (int c = 0; c < n_; ++c)
      if (c != held && clear[c]) emit(held, c);
  }

  bool is_goal(const State& s) const { return s == goal_; }

  Cost h(const State& s) const {
    int misplaced = 0;
    bool holding = false;
    for (int b = 0; b < n_; ++b) {
      if (support(s, b) == hand()) {
        holding = true;
      } else if (!in_place(s, b)) {
        ++misplaced;
      }
    }
    if (variant_ == BlocksVariant::standard) return misplaced + (holding ? 1 : 0);
    return 2 * misplaced + (holding ? 1 : 0);
  }

  double d(const State& s) const { return h(s); }

  Key key(const State& s) const { return s; }

  // A block is in place if it and everything below it match the goal.
  bool in_place(const State& s, int b) const {
    for (int cur = b;;) {
      const int on = support(s, cur);
      if (on != support(goal_, cur)) return false;
      if (on == table()) return true;
      cur = on;
    }
  }

 private:
  int n_ = 0;
  BlocksVariant variant_;
  State initial_;
  State goal_;
};

}  // namespace rectsearch
