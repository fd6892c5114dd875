#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rectsearch/rectangle.hpp"
#include "rectsearch/slot_table.hpp"

namespace rectsearch {

// Rectangle search in which every depth is divided into numbered slots.
// Slot j at depth L+1 is filled right after slot j at depth L has been
// processed, so each depth sees exactly the candidates a fixed-width
// slotted beam of width j would see. Duplicates follow the (slot, g)
// rule of SlotTable.
template <SearchDomain D>
class StrictRectangleSearch {
 public:
  using Action = ActionOf<D>;
  using Key = KeyOf<D>;
  using N = NodeOf<D>;

  static constexpr std::size_t kBytesPerNode =
      sizeof(N) + sizeof(QueueEntry) + sizeof(NodeId) + sizeof(Key) + 32;

  StrictRectangleSearch(const D& dom, RectangleConfig cfg, SearchLog<Key>* selections = nullptr,
                        SearchLog<Key>* expansions = nullptr)
      : dom_(dom),
        cfg_(cfg),
        selections_(selections),
        expansions_(expansions),
        monitor_(cfg.limits, kBytesPerNode) {
    inc_.cost = cfg.initial_bound;
  }

  SearchResult<Action> run() {
    if (start()) {
      while (!monitor_.stopped()) {
        if (!iterate()) break;
        if (cfg_.max_iterations && iterations_ >= *cfg_.max_iterations) {
          if (first_with_work() < levels_.size()) monitor_.stop(TerminalStatus::iteration_limit);
          break;
        }
      }
    }
    SearchResult<Action> r;
    r.trace = monitor_.finish(TerminalStatus::exhausted_optimal);
    r.stats = stats_;
    if (inc_.goal != kNoNode) {
      auto p = reconstruct_path(pool_, inc_.goal);
      r.plan = std::move(p.actions);
      r.plan_cost = p.cost;
    }
    return r;
  }

 private:
  struct Level {
    NodeQueue queue;
    std::vector<NodeId> slots;  // kNoNode marks a vacant slot
    std::uint32_t processed = 0;
    std::uint32_t pending = 0;  // selected, not yet processed, non-vacant
  };

  bool start() {
    N root = make_root(dom_);
    const NodeId id = pool_.add(root);
    monitor_.add_nodes();
    if (dom_.is_goal(root.state)) {
      if (cost_less(0, inc_.cost)) improve(id);
      return false;
    }
    table_.insert(dom_.key(root.state), 0, 0);
    level(0).slots.push_back(id);
    level(0).processed = 1;
    if (!monitor_.begin_expansion()) return false;
    expand(id, 0, 1);
    select_into(1, 1);
    return true;
  }

  bool has_work(std::size_t L) const {
    return L < levels_.size() && (!levels_[L].queue.empty() || levels_[L].pending > 0);
  }

  // First level with work; every shallower level is finished for good.
  std::size_t first_with_work() {
    while (lo_ < levels_.size() && !has_work(lo_)) ++lo_;
    return lo_;
  }

  bool parent_finished(std::size_t L) { return first_with_work() >= L; }

  bool iterate() {
    const std::size_t lo = first_with_work();
    if (lo >= levels_.size()) return false;
    std::size_t hi = levels_.size() - 1;
    while (!has_work(hi)) --hi;
    for (std::size_t L = lo; L < hi && !monitor_.stopped(); ++L) turn(L);
    for (std::size_t L = hi; L < hi + cfg_.aspect && !monitor_.stopped(); ++L)
      for (std::uint64_t k = 0; k < depth_; ++k)
        if (!turn(L)) break;
    depth_ += cfg_.aspect;
    ++iterations_;
    stats_.iteration_ends.push_back(monitor_.expansions());
    return true;
  }

  // Processes the next slot of level L. Returns false if the slot could
  // not be processed yet (its node has not been chosen) or the run stopped.
  bool turn(std::size_t L) {
    const std::uint32_t j = level(L).processed + 1;
    if (level(L).slots.size() < j) {
      if (!parent_finished(L) || !has_work(L)) return false;
      select_into(L, j);
    }
    Level& lv = level(L);
    const NodeId id = lv.slots[j - 1];
    lv.processed = j;
    if (id != kNoNode) {
      --lv.pending;
      if (cost_less(pool_[id].f(), inc_.cost)) {
        if (!monitor_.begin_expansion()) return false;
        expand(id, L, j);
      }
    }
    select_into(L + 1, j);
    return true;
  }

  void select_into(std::size_t L, std::uint32_t j) {
    Level& lv = level(L);
    if (lv.slots.size() + 1 != j) throw std::logic_error("strict rectangle slot out of order");
    NodeId pick = kNoNode;
    while (!lv.queue.empty()) {
      const QueueEntry e = lv.queue.pop();
      if (cost_less(pool_[e.id].f(), inc_.cost)) {
        pick = e.id;
        break;
      }
    }
    lv.slots.push_back(pick);
    if (pick != kNoNode) ++lv.pending;
    if (selections_) {
      const std::uint32_t depth = static_cast<std::uint32_t>(L);
      if (pick == kNoNode)
        selections_->push_back({depth, j, Key{}, true});
      else
        selections_->push_back({depth, j, dom_.key(pool_[pick].state), false});
    }
  }

  void expand(NodeId id, std::size_t L, std::uint32_t slot) {
    const N parent = pool_[id];
    if (expansions_) expansions_->push_back({parent.depth, slot, dom_.key(parent.state), false});
    generate(dom_, parent.state, succ_);
    monitor_.add_generated(succ_.size());
    for (auto& s : succ_) {
      const Cost g = parent.g + s.cost;
      if (!cost_less(g + s.h, inc_.cost)) continue;
      if (dom_.is_goal(s.state)) {
        improve(add_child(parent, id, s, g));
        continue;
      }
      if (!table_.insert(dom_.key(s.state), slot, g)) continue;
      const NodeId c = add_child(parent, id, s, g);
      level(L + 1).queue.push(make_entry(pool_[c], c, cfg_.ordering));
    }
  }

  NodeId add_child(const N& parent, NodeId pid, SuccessorOf<D>& s, Cost g) {
    N c;
    c.state = std::move(s.state);
    c.g = g;
    c.h = s.h;
    c.d = static_cast<float>(s.d);
    c.depth = parent.depth + 1;
    c.parent = pid;
    c.action = s.action;
    monitor_.add_nodes();
    return pool_.add(c);
  }

  void improve(NodeId goal) {
    inc_.cost = pool_[goal].g;
    inc_.goal = goal;
    inc_.found_after_expansions = monitor_.expansions();
    monitor_.report_incumbent(inc_.cost);
  }

  Level& level(std::size_t L) {
    if (L >= levels_.size()) levels_.resize(L + 1);
    return levels_[L];
  }

  const D& dom_;
  RectangleConfig cfg_;
  SearchLog<Key>* selections_;
  SearchLog<Key>* expansions_;
  RunMonitor monitor_;
  NodePool<N> pool_;
  std::deque<Level> levels_;  // deque: references survive growth
  SlotTable<Key> table_;
  std::vector<SuccessorOf<D>> succ_;
  Incumbent inc_;
  std::size_t lo_ = 1;
  std::uint64_t depth_ = 1;
  std::uint64_t iterations_ = 0;
  SearchStats stats_;
};

template <SearchDomain D>
SearchResult<ActionOf<D>> strict_rectangle_search(const D& dom, const RectangleConfig& cfg = {},
                                                  SearchLog<KeyOf<D>>* selections = nullptr,
                                                  SearchLog<KeyOf<D>>* expansions = nullptr) {
  return StrictRectangleSearch<D>(dom, cfg, selections, expansions).run();
}

}  // namespace rectsearch
