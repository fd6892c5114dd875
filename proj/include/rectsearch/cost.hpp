#pragma once

#include <limits>

namespace rectsearch {

using Cost = double;

inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::infinity();

// Absolute slack used by every cost comparison in the library.
inline constexpr Cost kCostSlack = 1e-12;

constexpr bool cost_less(Cost a, Cost b) noexcept { return a < b - kCostSlack; }

constexpr bool cost_equal(Cost a, Cost b) noexcept {
  return !cost_less(a, b) && !cost_less(b, a);
}

}  // namespace rectsearch
