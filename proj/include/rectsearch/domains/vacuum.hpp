#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rectsearch/domain.hpp"

namespace rectsearch {

// heavy: a move costs 1 + dirt vacuumed so far. heavy-literal: a move
// costs exactly the dirt vacuumed so far (zero before the first pickup,
// which the search core rejects).
enum class VacuumCost { unit, heavy, heavy_literal };

inline std::string_view to_string(VacuumCost c) {
  switch (c) {
    case VacuumCost::unit: return "unit";
    case VacuumCost::heavy: return "heavy";
    case VacuumCost::heavy_literal: return "heavy-literal";
  }
  return "?";
}

inline VacuumCost parse_vacuum_cost(std::string_view s) {
  for (auto c : {VacuumCost::unit, VacuumCost::heavy, VacuumCost::heavy_literal})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown vacuum cost model: " + std::string(s));
}

struct VacuumInstance {
  int width = 0;
  int height = 0;
  std::vector<bool> blocked;  // row-major
  int agent = 0;              // cell index
  std::vector<int> dirt;      // cell indices
};

struct VacuumState {
  std::uint32_t agent = 0;
  std::uint64_t dirty = 0;  // bit i: dirt i still present

  friend bool operator==(const VacuumState&, const VacuumState&) = default;
  template <class H>
  friend H AbslHashValue(H h, const VacuumState& s) {
    return H::combine(std::move(h), s.agent, s.dirty);
  }
};

class VacuumDomain {
 public:
  using State = VacuumState;
  using Action = std::uint8_t;  // 0 up, 1 down, 2 left, 3 right, 4 vacuum
  using Key = VacuumState;

  static constexpr int kMaxDirt = 64;

  VacuumDomain(const VacuumInstance& inst, VacuumCost cost)
      : w_(inst.width), h_(inst.height), blocked_(inst.blocked), dirt_(inst.dirt), model_(cost) {
    if (w_ < 1 || h_ < 1 || static_cast<int>(blocked_.size()) != w_ * h_)
      throw std::invalid_argument("vacuum grid size mismatch");
    if (dirt_.size() > kMaxDirt) throw std::invalid_argument("at most 64 dirt piles supported");
    auto free_cell = [&](int c) { return c >= 0 && c < w_ * h_ && !blocked_[c]; };
    if (!free_cell(inst.agent)) throw std::invalid_argument("agent must start on a free cell");
    dirt_at_.assign(w_ * h_, -1);
    for (std::size_t i = 0; i < dirt_.size(); ++i) {
      if (!free_cell(dirt_[i]) || dirt_at_[dirt_[i]] >= 0)
        throw std::invalid_argument("dirt must lie on distinct free cells");
      dirt_at_[dirt_[i]] = static_cast<int>(i);
    }
    initial_ = {static_cast<std::uint32_t>(inst.agent),
                dirt_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dirt_.size()) - 1};
  }

  int width() const noexcept { return w_; }
  int height() const noexcept { return h_; }
  int dirt_count() const noexcept { return static_cast<int>(dirt_.size()); }

  State initial_state() const { return initial_; }

  void successors(const State& s, std::vector<Successor<State, Action>>& out) const {
    const int x = static_cast<int>(s.agent) % w_, y = static_cast<int>(s.agent) / w_;
    const int cleaned = dirt_count() - std::popcount(s.dirty);
    const Cost move = model_ == VacuumCost::unit ? 1.0
                      : model_ == VacuumCost::heavy ? 1.0 + cleaned
                                                    : static_cast<Cost>(cleaned);
    const Spread spread = spread_of(s.dirty);
    static constexpr int dx[4] = {0, 0, -1, 1};
    static constexpr int dy[4] = {-1, 1, 0, 0};
    for (int a = 0; a < 4; ++a) {
      const int nx = x + dx[a], ny = y + dy[a];
      if (nx < 0 || nx >= w_ || ny < 0 || ny >= h_ || blocked_[ny * w_ + nx]) continue;
      const State t{static_cast<std::uint32_t>(ny * w_ + nx), s.dirty};
      out.push_back({t, static_cast<Action>(a), move, h_with(t, spread), d_with(t, spread)});
    }
    const int i = dirt_at_[s.agent];
    if (i >= 0 && (s.dirty >> i) & 1) {
      const State t{s.agent, s.dirty & ~(std::uint64_t{1} << i)};
      out.push_back({t, 4, 1.0, h(t), d(t)});
    }
  }

  bool is_goal(const State& s) const { return s.dirty == 0; }

  Cost h(const State& s) const { return h_with(s, spread_of(s.dirty)); }
  double d(const State& s) const { return d_with(s, spread_of(s.dirty)); }

  Key key(const State& s) const { return s; }

  // Weight of a Manhattan minimum spanning tree over the remaining dirt.
  int mst(std::uint64_t dirty) const { return spread_of(dirty).mst; }

 private:
  struct Spread {
    int remaining = 0;
    int mst = 0;
  };

  int manhattan(int a, int b) const {
    return std::abs(a % w_ - b % w_) + std::abs(a / w_ - b / w_);
  }

  Spread spread_of(std::uint64_t dirty) const {
    std::vector<int> cells;
    for (std::uint64_t m = dirty; m; m &= m - 1) cells.push_back(dirt_[std::countr_zero(m)]);
    Spread sp{static_cast<int>(cells.size()), 0};
    if (cells.size() < 2) return sp;
    // Prim's algorithm on the complete Manhattan graph.
    std::vector<int> best(cells.size(), std::numeric_limits<int>::max());
    std::vector<bool> in(cells.size(), false);
    best[0] = 0;
    for (std::size_t it = 0; it < cells.size(); ++it) {
      std::size_t u = cells.size();
      for (std::size_t v = 0; v < cells.size(); ++v)
        if (!in[v] && (u == cells.size() || best[v] < best[u])) u = v;
      in[u] = true;
      sp.mst += best[u];
      for (std::size_t v = 0; v < cells.size(); ++v)
        if (!in[v]) best[v] = std::min(best[v], manhattan(cells[u], cells[v]));
    }
    return sp;
  }

  int nearest(const State& s) const {
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t m = s.dirty; m; m &= m - 1)
      best = std::min(best, manhattan(static_cast<int>(s.agent), dirt_[std::countr_zero(m)]));
    return best;
  }

  double d_with(const State& s, const Spread& sp) const {
    if (sp.remaining == 0) return 0;
    return sp.remaining + sp.mst + nearest(s);
  }

  Cost h_with(const State& s, const Spread& sp) const {
    if (sp.remaining == 0) return 0;
    const int cleaned = dirt_count() - sp.remaining;
    const double per_step = model_ == VacuumCost::unit ? 1.0
                            : model_ == VacuumCost::heavy ? 1.0 + cleaned
                                                          : static_cast<double>(cleaned);
    return sp.remaining + per_step * (sp.mst + nearest(s));
  }

  int w_, h_;
  std::vector<bool> blocked_;
  std::vector<int> dirt_;
  std::vector<int> dirt_at_;
  VacuumCost model_;
  State initial_{};
};

}  // namespace rectsearch
