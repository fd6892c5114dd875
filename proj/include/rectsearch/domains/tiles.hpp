#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rectsearch/domain.hpp"

namespace rectsearch {

enum class TileCost { unit, heavy, sqrt, inverse, reverse, reverse_inverse };

inline std::string_view to_string(TileCost c) {
  switch (c) {
    case TileCost::unit: return "unit";
    case TileCost::heavy: return "heavy";
    case TileCost::sqrt: return "sqrt";
    case TileCost::inverse: return "inverse";
    case TileCost::reverse: return "reverse";
    case TileCost::reverse_inverse: return "reverse-inverse";
  }
  return "?";
}

inline TileCost parse_tile_cost(std::string_view s) {
  for (auto c : {TileCost::unit, TileCost::heavy, TileCost::sqrt, TileCost::inverse,
                 TileCost::reverse, TileCost::reverse_inverse})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown tile cost model: " + std::string(s));
}

// Sliding-tile puzzle. cells[i] is the tile in cell i (row-major), 0 is
// the blank. The goal has the blank in cell 0 and tile t in cell t.
struct TilesInstance {
  int width = 3;
  int height = 3;
  std::vector<int> cells;
};

// Up to 25 cells packed five bits per cell.
struct TilesState {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const TilesState&, const TilesState&) = default;
  template <class H>
  friend H AbslHashValue(H h, const TilesState& s) {
    return H::combine(std::move(h), s.lo, s.hi);
  }
};

class TilesDomain {
 public:
  using State = TilesState;
  using Action = std::uint8_t;  // direction the blank moves: 0 up, 1 left, 2 right, 3 down
  using Key = TilesState;

  static constexpr int kMaxCells = 25;

  TilesDomain(const TilesInstance& inst, TileCost cost) : w_(inst.width), h_(inst.height), model_(cost) {
    n_ = w_ * h_;
    if (w_ < 2 || h_ < 2 || n_ > kMaxCells)
      throw std::invalid_argument("tiles board must be at least 2x2 and at most 25 cells");
    validate_permutation(inst.cells, n_);
    if (!solvable(inst)) throw std::invalid_argument("tiles instance is not solvable");
    for (int t = 0; t < n_; ++t) cost_[t] = t == 0 ? 0 : tile_cost(t);
    for (int t = 1; t < n_; ++t)
      for (int c = 0; c < n_; ++c) {
        md_[t][c] = static_cast<std::uint8_t>(std::abs(c % w_ - t % w_) + std::abs(c / w_ - t / w_));
        hcost_[t][c] = cost_[t] * md_[t][c];
      }
    initial_ = pack(inst.cells);
    std::vector<int> goal(n_);
    for (int i = 0; i < n_; ++i) goal[i] = i;
    goal_ = pack(goal);
  }

  static void validate_permutation(const std::vector<int>& cells, int n) {
    if (static_cast<int>(cells.size()) != n)
      throw std::invalid_argument("tiles instance has " + std::to_string(cells.size()) +
                                  " cells, expected " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (int t : cells) {
      if (t < 0 || t >= n || seen[t]) throw std::invalid_argument("tiles are not a permutation");
      seen[t] = true;
    }
  }

  // Parity test against the goal with the blank in cell 0.
  static bool solvable(const TilesInstance& inst) {
    int inversions = 0, blank = 0;
    const auto& c = inst.cells;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) {
        blank = static_cast<int>(i);
        continue;
      }
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[j] != 0 && c[j] < c[i]) ++inversions;
    }
    if (inst.width % 2 == 1) return inversions % 2 == 0;
    return (inversions + blank / inst.width) % 2 == 0;
  }

  Cost tile_cost(int t) const {
    switch (model_) {
      case TileCost::unit: return 1;
      case TileCost::heavy: return t;
      case TileCost::sqrt: return std::sqrt(static_cast<double>(t));
      case TileCost::inverse: return 1.0 / t;
      case TileCost::reverse: return n_ - t;
      case TileCost::reverse_inverse: return 1.0 / (n_ - t);
    }
    return 1;
  }

  int width() const noexcept { return w_; }
  int height() const noexcept { return h_; }
  int cells() const noexcept { return n_; }
  TileCost cost_model() const noexcept { return model_; }

  State pack(const std::vector<int>& cells) const {
    Bits b = 0;
    for (int i = 0; i < n_; ++i) b |= static_cast<Bits>(cells[i]) << (5 * i);
    return from_bits(b);
  }
  std::vector<int> unpack(const State& s) const {
    std::vector<int> out(n_);
    const Bits b = to_bits(s);
    for (int i = 0; i < n_; ++i) out[i] = static_cast<int>((b >> (5 * i)) & 31);
    return out;
  }
  int tile_at(const State& s, int cell) const {
    return static_cast<int>((to_bits(s) >> (5 * cell)) & 31);
  }

  State initial_state() const { return initial_; }

  void successors(const State& s, std::vector<Successor<State, Action>>& out) const {
    const Bits b = to_bits(s);
    int blank = 0;
    while (((b >> (5 * blank)) & 31) != 0) ++blank;
    const int bx = blank % w_, by = blank / w_;
    static constexpr int dx[4] = {0, -1, 1, 0};
    static constexpr int dy[4] = {-1, 0, 0, 1};
    for (int a = 0; a < 4; ++a) {
      const int x = bx + dx[a], y = by + dy[a];
      if (x < 0 || x >= w_ || y < 0 || y >= h_) continue;
      const int cell = y * w_ + x;
      const Bits t = (b >> (5 * cell)) & 31;
      // Tile t moves from `cell` into the blank's cell.
      const Bits nb = (b & ~(Bits{31} << (5 * cell))) | (t << (5 * blank));
      const State ns = from_bits(nb);
      out.push_back({ns, static_cast<Action>(a), cost_[t], h(ns), d(ns)});
    }
  }

  bool is_goal(const State& s) const { return s == goal_; }

  Cost h(const State& s) const {
    const Bits b = to_bits(s);
    Cost sum = 0;
    for (int c = 0; c < n_; ++c) {
      const int t = static_cast<int>((b >> (5 * c)) & 31);
      if (t != 0) sum += hcost_[t][c];
    }
    return sum;
  }

  double d(const State& s) const {
    const Bits b = to_bits(s);
    int sum = 0;
    for (int c = 0; c < n_; ++c) {
      const int t = static_cast<int>((b >> (5 * c)) & 31);
      if (t != 0) sum += md_[t][c];
    }
    return sum;
  }

  Key key(const State& s) const { return s; }

 private:
  using Bits = unsigned __int128;
  static Bits to_bits(const State& s) { return (static_cast<Bits>(s.hi) << 64) | s.lo; }
  static State from_bits(Bits b) {
    return {static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(b >> 64)};
  }

  int w_, h_, n_;
  TileCost model_;
  Cost cost_[kMaxCells] = {};
  std::uint8_t md_[kMaxCells][kMaxCells] = {};
  Cost hcost_[kMaxCells][kMaxCells] = {};
  State initial_{};
  State goal_{};
};

}  // namespace rectsearch
