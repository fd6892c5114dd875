#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rectsearch/ordering.hpp"
#include "rectsearch/result.hpp"
#include "rectsearch/slot_table.hpp"

namespace rectsearch {

struct MonobeadConfig {
  std::uint32_t width = 1;
  Ordering ordering{OrderKey::d};
  Limits limits{};
};

// Slotted beam search. At each depth slot i is expanded, its children are
// poured into the next depth's queue, and the queue's best node becomes
// slot i of the next depth; an empty queue leaves the slot vacant. The run
// continues until every slot is vacant, recording each improving goal.
template <SearchDomain D>
SearchResult<ActionOf<D>> monobead_search(const D& dom, const MonobeadConfig& cfg,
                                          SearchLog<KeyOf<D>>* selections = nullptr,
                                          SearchLog<KeyOf<D>>* expansions = nullptr) {
  using N = NodeOf<D>;
  using Key = KeyOf<D>;
  RunMonitor monitor(cfg.limits, sizeof(N) + sizeof(QueueEntry) + sizeof(Key) + 32);
  NodePool<N> pool;
  SlotTable<Key> table;
  std::vector<SuccessorOf<D>> succ;
  Incumbent inc;
  SearchResult<ActionOf<D>> r;

  auto improve = [&](NodeId goal) {
    inc.cost = pool[goal].g;
    inc.goal = goal;
    monitor.report_incumbent(inc.cost);
  };

  NodeQueue next;
  // Expands `id` (in `slot`) and pours the surviving children into `next`.
  auto expand = [&](NodeId id, std::uint32_t slot) {
    const N parent = pool[id];
    if (expansions) expansions->push_back({parent.depth, slot, dom.key(parent.state), false});
    generate(dom, parent.state, succ);
    monitor.add_generated(succ.size());
    for (auto& s : succ) {
      N c;
      c.g = parent.g + s.cost;
      c.h = s.h;
      c.d = static_cast<float>(s.d);
      c.depth = parent.depth + 1;
      c.parent = id;
      c.action = s.action;
      const bool goal = dom.is_goal(s.state);
      if (!goal && !table.insert(dom.key(s.state), slot, c.g)) continue;
      c.state = std::move(s.state);
      const NodeId cid = pool.add(c);
      monitor.add_nodes();
      if (goal) {
        if (cost_less(c.g, inc.cost)) improve(cid);
      } else {
        next.push(make_entry(pool[cid], cid, cfg.ordering));
      }
    }
  };
  auto select = [&](std::uint32_t depth, std::uint32_t slot) {
    NodeId pick = kNoNode;
    if (!next.empty()) pick = next.pop().id;
    if (selections) {
      if (pick == kNoNode)
        selections->push_back({depth, slot, Key{}, true});
      else
        selections->push_back({depth, slot, dom.key(pool[pick].state), false});
    }
    return pick;
  };

  const N root = make_root(dom);
  const NodeId root_id = pool.add(root);
  monitor.add_nodes();
  if (dom.is_goal(root.state)) {
    improve(root_id);
  } else if (cfg.width > 0 && monitor.begin_expansion()) {
    table.insert(dom.key(root.state), 0, 0);
    expand(root_id, 1);
    std::vector<NodeId> slots(cfg.width);
    for (std::uint32_t i = 0; i < cfg.width; ++i) slots[i] = select(1, i + 1);
    for (std::uint32_t depth = 1; !monitor.stopped(); ++depth) {
      bool any = false;
      for (NodeId id : slots) any = any || id != kNoNode;
      if (!any) break;
      next.clear();
      for (std::uint32_t i = 0; i < cfg.width && !monitor.stopped(); ++i) {
        if (slots[i] != kNoNode) {
          if (!monitor.begin_expansion()) break;
          expand(slots[i], i + 1);
        }
        slots[i] = select(depth + 1, i + 1);
      }
    }
  }
  r.trace = monitor.finish(TerminalStatus::exhausted_optimal);
  if (inc.goal != kNoNode) {
    auto p = reconstruct_path(pool, inc.goal);
    r.plan = std::move(p.actions);
    r.plan_cost = p.cost;
  }
  return r;
}

}  // namespace rectsearch
