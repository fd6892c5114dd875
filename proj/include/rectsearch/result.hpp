#pragma once

#include <cstdint>
#include <vector>

#include "rectsearch/trace.hpp"

namespace rectsearch {

// Per-iteration bookkeeping for iterative algorithms. Unused fields stay empty.
struct SearchStats {
  std::vector<std::uint64_t> iteration_ends;  // expansion count at the end of each iteration
  std::vector<Cost> bounds;                   // DFS* cost bounds, ILDS* depth bounds
  std::vector<double> weights;                // ARA* weight in effect at each solution
};

template <class Action>
struct SearchResult {
  AnytimeTrace trace;
  std::vector<Action> plan;
  Cost plan_cost = kInfiniteCost;
  SearchStats stats;
};

// One expansion or selection, for algorithms that report their order.
// `slot` is 0 for algorithms without slots.
template <class Key>
struct LogEntry {
  std::uint32_t depth = 0;
  std::uint32_t slot = 0;
  Key key{};
  bool vacant = false;

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

template <class Key>
using SearchLog = std::vector<LogEntry<Key>>;

}  // namespace rectsearch
