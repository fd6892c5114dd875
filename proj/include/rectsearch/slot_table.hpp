#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "rectsearch/cost.hpp"

namespace rectsearch {

// Duplicate table for slotted searches. Each state keeps the Pareto set
// of (slot, g) pairs it was generated with; a new copy is redundant if an
// entry has both a slot no later and a g no worse.
template <class Key>
class SlotTable {
 public:
  bool dominated(const Key& k, std::uint32_t slot, Cost g) const {
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    for (const auto& [s, eg] : it->second)
      if (s <= slot && !cost_less(g, eg)) return true;
    return false;
  }

  // Returns false (and records nothing) if the copy is dominated.
  bool insert(const Key& k, std::uint32_t slot, Cost g) {
    auto& entries = map_[k];
    for (const auto& [s, eg] : entries)
      if (s <= slot && !cost_less(g, eg)) return false;
    std::erase_if(entries, [&](const auto& e) { return slot <= e.first && !cost_less(e.second, g); });
    entries.emplace_back(slot, g);
    return true;
  }

  std::size_t size() const noexcept { return map_.size(); }

 private:
  absl::flat_hash_map<Key, std::vector<std::pair<std::uint32_t, Cost>>> map_;
};

}  // namespace rectsearch
