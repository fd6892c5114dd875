#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectsearch/domain.hpp"

namespace rectsearch {

// unit and life move in 4 directions; octile moves in 8 with diagonal
// steps costing sqrt(2). Under life costs a move costs the 1-based row
// of the cell it leaves.
enum class GridCost { unit, life, octile };

inline std::string_view to_string(GridCost c) {
  switch (c) {
    case GridCost::unit: return "unit";
    case GridCost::life: return "life";
    case GridCost::octile: return "octile";
  }
  return "?";
}

inline GridCost parse_grid_cost(std::string_view s) {
  for (auto c : {GridCost::unit, GridCost::life, GridCost::octile})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown grid cost model: " + std::string(s));
}

struct GridMap {
  int width = 0;
  int height = 0;
  std::vector<bool> blocked;  // row-major, row 0 at the top

  bool passable(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height && !blocked[y * width + x];
  }
};

struct GridScenario {
  int sx = 0, sy = 0, gx = 0, gy = 0;
};

class GridDomain {
 public:
  using State = std::uint32_t;  // cell index
  using Action = std::uint8_t;  // 0 up, 1 down, 2 left, 3 right, 4-7 diagonals
  using Key = std::uint32_t;

  GridDomain(GridMap map, GridScenario sc, GridCost cost)
      : map_(std::move(map)), sc_(sc), model_(cost) {
    if (map_.width < 1 || map_.height < 1 ||
        static_cast<int>(map_.blocked.size()) != map_.width * map_.height)
      throw std::invalid_argument("grid map size mismatch");
    if (!map_.passable(sc.sx, sc.sy) || !map_.passable(sc.gx, sc.gy))
      throw std::invalid_argument("grid start and goal must be passable cells");
  }

  const GridMap& map() const noexcept { return map_; }
  const GridScenario& scenario() const noexcept { return sc_; }
  GridCost cost_model() const noexcept { return model_; }
  bool eight_way() const noexcept { return model_ == GridCost::octile; }

  State cell(int x, int y) const { return static_cast<State>(y * map_.width + x); }

  State initial_state() const { return cell(sc_.sx, sc_.sy); }

  void successors(const State& s, std::vector<Successor<State, Action>>& out) const {
    const int x = static_cast<int>(s) % map_.width, y = static_cast<int>(s) / map_.width;
    static constexpr int dx[8] = {0, 0, -1, 1, -1, 1, -1, 1};
    static constexpr int dy[8] = {-1, 1, 0, 0, -1, -1, 1, 1};
    const int moves = eight_way() ? 8 : 4;
    for (int a = 0; a < moves; ++a) {
      const int nx = x + dx[a], ny = y + dy[a];
      if (!map_.passable(nx, ny)) continue;
      Cost c = 1;
      if (a >= 4) {
        if (!map_.passable(x + dx[a], y) && !map_.passable(x, y + dy[a])) continue;
        c = std::sqrt(2.0);
      }
      if (model_ == GridCost::life) c = y + 1;
      const State t = cell(nx, ny);
      out.push_back({t, static_cast<Action>(a), c, h(t), d(t)});
    }
  }

  bool is_goal(const State& s) const { return s == cell(sc_.gx, sc_.gy); }

  Cost h(const State& s) const {
    const int x = static_cast<int>(s) % map_.width, y = static_cast<int>(s) / map_.width;
    const int dx = std::abs(x - sc_.gx), dy = std::abs(y - sc_.gy);
    switch (model_) {
      case GridCost::unit: return dx + dy;
      case GridCost::octile:
        return std::max(dx, dy) + (std::sqrt(2.0) - 1) * std::min(dx, dy);
      case GridCost::life: return life_cost(x, y + 1, sc_.gx, sc_.gy + 1);
    }
    return 0;
  }

  double d(const State& s) const {
    const int x = static_cast<int>(s) % map_.width, y = static_cast<int>(s) / map_.width;
    const int dx = std::abs(x - sc_.gx), dy = std::abs(y - sc_.gy);
    return eight_way() ? std::max(dx, dy) : dx + dy;
  }

  Key key(const State& s) const { return s; }

  // Cheapest obstacle-free life-cost path between 1-based rows r0 and r1.
  // Horizontal steps are best taken on the highest row m visited (lowest
  // number); the cost as a function of m is convex, so a few candidates
  // around the stationary point suffice.
  static Cost life_cost(int x0, int r0, int x1, int r1) {
    const long long dx = std::abs(x0 - x1);
    const long long top = std::min(r0, r1);
    auto sum = [](long long a, long long b) { return a > b ? 0LL : (a + b) * (b - a + 1) / 2; };
    auto total = [&](long long m) { return sum(m + 1, r0) + dx * m + sum(m, r1 - 1); };
    long long best = total(top);
    const long long guess = (dx + 1) / 2;
    for (long long m : {guess - 1, guess, guess + 1, 1LL})
      if (m >= 1 && m <= top) best = std::min(best, total(m));
    return static_cast<Cost>(best);
  }

 private:
  GridMap map_;
  GridScenario sc_;
  GridCost model_;
};

}  // namespace rectsearch
