#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rectsearch/domains/blocks.hpp"
#include "rectsearch/domains/grid.hpp"
#include "rectsearch/domains/pancake.hpp"
#include "rectsearch/domains/tiles.hpp"
#include "rectsearch/domains/vacuum.hpp"

namespace rectsearch {

using Rng = std::mt19937_64;

// Uniform integer in [0, n). Implemented here rather than with
// std::uniform_int_distribution so generated files do not depend on the
// standard library vendor.
inline std::uint64_t below(Rng& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

// Uniformly random solvable board (an unsolvable permutation is repaired
// by swapping two tiles, which flips the parity).
inline TilesInstance random_tiles(int width, int height, Rng& rng) {
  TilesInstance t{width, height, {}};
  for (int i = 0; i < width * height; ++i) t.cells.push_back(i);
  shuffle(t.cells, rng);
  if (!TilesDomain::solvable(t)) {
    int a = 0;
    while (t.cells[a] == 0) ++a;
    int b = a + 1;
    while (t.cells[b] == 0) ++b;
    std::swap(t.cells[a], t.cells[b]);
  }
  return t;
}

inline PancakeInstance random_pancake(int n, Rng& rng) {
  PancakeInstance p;
  for (int i = 1; i <= n; ++i) p.stack.push_back(i);
  shuffle(p.stack, rng);
  return p;
}

// Blocks placed in random order, each on the table or on top of a
// randomly chosen existing tower.
inline std::vector<int> random_tower_configuration(int n, Rng& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  shuffle(order, rng);
  std::vector<int> on(n, -1), tops;
  for (int b : order) {
    const std::uint64_t pick = below(rng, tops.size() + 1);
    if (pick == tops.size()) {
      tops.push_back(b);
    } else {
      on[b] = tops[pick];
      tops[pick] = b;
    }
  }
  return on;
}

inline BlocksInstance random_blocks(int n, Rng& rng) {
  BlocksInstance b;
  b.initial_on = random_tower_configuration(n, rng);
  b.goal_on = random_tower_configuration(n, rng);
  return b;
}

// Blocks exactly round(density * cells) cells chosen uniformly.
inline std::vector<bool> random_obstacles(int width, int height, double density, Rng& rng) {
  const int cells = width * height;
  std::vector<int> order(cells);
  for (int i = 0; i < cells; ++i) order[i] = i;
  shuffle(order, rng);
  std::vector<bool> blocked(cells, false);
  const int k = static_cast<int>(std::lround(density * cells));
  for (int i = 0; i < k; ++i) blocked[order[i]] = true;
  return blocked;
}

// Cells reachable from `from` by 4-way moves.
inline std::vector<int> component(int width, int height, const std::vector<bool>& blocked, int from) {
  std::vector<bool> seen(blocked.size(), false);
  std::vector<int> out;
  std::deque<int> q{from};
  seen[from] = true;
  while (!q.empty()) {
    const int c = q.front();
    q.pop_front();
    out.push_back(c);
    const int x = c % width, y = c / width;
    const int nx[4] = {x, x, x - 1, x + 1}, ny[4] = {y - 1, y + 1, y, y};
    for (int i = 0; i < 4; ++i) {
      if (nx[i] < 0 || nx[i] >= width || ny[i] < 0 || ny[i] >= height) continue;
      const int n = ny[i] * width + nx[i];
      if (!blocked[n] && !seen[n]) {
        seen[n] = true;
        q.push_back(n);
      }
    }
  }
  return out;
}

inline VacuumInstance random_vacuum(int width, int height, int dirt, double density, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    VacuumInstance v{width, height, random_obstacles(width, height, density, rng), 0, {}};
    std::vector<int> free;
    for (int c = 0; c < width * height; ++c)
      if (!v.blocked[c]) free.push_back(c);
    if (free.empty()) continue;
    v.agent = free[below(rng, free.size())];
    auto reach = component(width, height, v.blocked, v.agent);
    std::erase(reach, v.agent);
    if (static_cast<int>(reach.size()) < dirt) continue;
    shuffle(reach, rng);
    v.dirt.assign(reach.begin(), reach.begin() + dirt);
    return v;
  }
  throw std::runtime_error("could not generate a connected vacuum instance");
}

struct GridInstance {
  GridMap map;
  GridScenario scenario;
};

inline GridInstance random_grid(int width, int height, double density, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    GridMap m{width, height, random_obstacles(width, height, density, rng)};
    std::vector<int> free;
    for (int c = 0; c < width * height; ++c)
      if (!m.blocked[c]) free.push_back(c);
    if (free.size() < 2) continue;
    const int s = free[below(rng, free.size())];
    auto reach = component(width, height, m.blocked, s);
    std::erase(reach, s);
    if (reach.empty()) continue;
    const int g = reach[below(rng, reach.size())];
    return {m, {s % width, s / width, g % width, g / width}};
  }
  throw std::runtime_error("could not generate a connected grid instance");
}

}  // namespace rectsearch
