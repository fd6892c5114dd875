#pragma once

#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <absl/hash/hash.h>

#include "rectsearch/domain.hpp"

namespace rectsearch {

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleStateLimit = 2'000'000;

// Uniform-cost search from `from`, written independently of the search
// algorithms. Returns the optimal cost to a goal, infinity if none is
// reachable. Zero-cost edges are allowed, negative ones are not.
// Throws OracleTooLarge once more than `max_states` distinct states
// have been seen.
template <SearchDomain D>
Cost oracle_optimal(const D& dom, const StateOf<D>& from,
                    std::size_t max_states = kOracleStateLimit) {
  using State = StateOf<D>;
  using Key = KeyOf<D>;
  struct Item {
    Cost g;
    State s;
  };
  auto later = [](const Item& a, const Item& b) { return a.g > b.g; };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> q(later);
  std::unordered_map<Key, Cost, absl::Hash<Key>> dist;
  dist.emplace(dom.key(from), 0);
  q.push({0, from});
  std::vector<SuccessorOf<D>> succ;
  while (!q.empty()) {
    Item it = q.top();
    q.pop();
    if (it.g > dist[dom.key(it.s)]) continue;
    if (dom.is_goal(it.s)) return it.g;
    succ.clear();
    dom.successors(it.s, succ);
    for (auto& c : succ) {
      if (!(c.cost >= 0)) throw NonPositiveEdgeCost(c.cost);
      const Cost g = it.g + c.cost;
      auto [pos, fresh] = dist.try_emplace(dom.key(c.state), g);
      if (!fresh) {
        if (g >= pos->second) continue;
        pos->second = g;
      }
      if (dist.size() > max_states)
        throw OracleTooLarge("oracle refused: more than " + std::to_string(max_states) + " states");
      q.push({g, std::move(c.state)});
    }
  }
  return kInfiniteCost;
}

template <SearchDomain D>
Cost oracle_optimal(const D& dom, std::size_t max_states = kOracleStateLimit) {
  return oracle_optimal(dom, dom.initial_state(), max_states);
}

}  // namespace rectsearch
