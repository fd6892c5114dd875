#pragma once

#include <stdexcept>

#include "rectsearch/domains/grid.hpp"

namespace rectsearch {

// A walled room crossed by horizontal barriers whose gaps alternate
// between the right and left ends, so the inside is one long winding
// lane. A one-cell corridor runs around the outside of the room. The
// start sits in the bottom-left corner of the room next to two exits.
struct SlalomParams {
  int room_width = 30;
  int room_height = 30;
  int lane = 2;  // free rows between barriers
  int gap = 2;   // barrier opening width
};

struct SlalomMap {
  GridMap map;
  GridScenario goal_outside;  // above the room, over its middle
  GridScenario goal_inside;   // in the top lane, in the middle
};

inline SlalomMap slalom_map(const SlalomParams& p) {
  if (p.room_width < 4 || p.room_height < 4 || p.lane < 1 || p.gap < 1 || p.gap >= p.room_width)
    throw std::invalid_argument("slalom map parameters out of range");
  // Columns: 0 corridor, 1 wall, 2..rw+1 room, rw+2 wall, rw+3 corridor.
  const int w = p.room_width + 4, h = p.room_height + 4;
  GridMap m{w, h, std::vector<bool>(static_cast<std::size_t>(w * h), false)};
  auto block = [&](int x, int y) { m.blocked[y * w + x] = true; };
  for (int x = 1; x <= w - 2; ++x) block(x, 1), block(x, h - 2);
  for (int y = 1; y <= h - 2; ++y) block(1, y), block(w - 2, y);

  const int left = 2, right = p.room_width + 1, top = 2, bottom = p.room_height + 1;
  bool gap_right = true;
  for (int y = bottom - p.lane; y > top; y -= p.lane + 1) {
    for (int x = left; x <= right; ++x) {
      const bool open = gap_right ? x > right - p.gap : x < left + p.gap;
      if (!open) block(x, y);
    }
    gap_right = !gap_right;
  }

  // Exits through the left and bottom walls beside the start.
  m.blocked[bottom * w + 1] = false;
  m.blocked[(h - 2) * w + left] = false;

  SlalomMap out;
  out.map = std::move(m);
  out.goal_outside = {left, bottom, w / 2, 0};
  out.goal_inside = {left, bottom, w / 2, top};
  return out;
}

}  // namespace rectsearch
