#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "rectsearch/ordering.hpp"
#include "rectsearch/result.hpp"

namespace rectsearch {

struct RectangleConfig {
  std::uint32_t aspect = 1;
  Ordering ordering{OrderKey::d};
  Limits limits{};
  // Known upper bound; only strictly cheaper solutions are reported.
  Cost initial_bound = kInfiniteCost;
  std::optional<std::uint64_t> max_iterations;
};

// (depth label, number of select-and-expand calls) in the order rectangle
// search performs them during iteration k, assuming no level runs empty.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> iteration_schedule(
    std::uint64_t k, std::uint64_t aspect) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (k == 0 || aspect == 0) return out;
  const std::uint64_t prev = (k - 1) * aspect;
  for (std::uint64_t label = 1; label <= prev; ++label) out.emplace_back(label, 1);
  const std::uint64_t depth = 1 + prev;
  for (std::uint64_t label = prev + 1; label <= k * aspect; ++label)
    out.emplace_back(label, depth);
  return out;
}

// Per-depth open lists. Index 0 holds the shallowest non-trimmed level.
class OpenLevels {
 public:
  struct Level {
    std::uint32_t label;
    NodeQueue queue;
  };

  void push_back_level() {
    const std::uint32_t label = levels_.empty() ? next_label_ : levels_.back().label + 1;
    levels_.push_back({label, {}});
  }
  // Drops empty levels from both ends; labels of the rest are unchanged.
  void trim() {
    while (!levels_.empty() && levels_.front().queue.empty()) {
      next_label_ = levels_.front().label + 1;
      levels_.pop_front();
    }
    while (!levels_.empty() && levels_.back().queue.empty()) {
      next_label_ = levels_.back().label;
      levels_.pop_back();
    }
  }
  Level& operator[](std::size_t i) { return levels_[i]; }
  const Level& operator[](std::size_t i) const { return levels_[i]; }
  std::size_t size() const noexcept { return levels_.size(); }
  bool empty() const noexcept { return levels_.empty(); }
  std::size_t total_nodes() const {
    std::size_t n = 0;
    for (const auto& l : levels_) n += l.queue.size();
    return n;
  }

 private:
  std::deque<Level> levels_;
  std::uint32_t next_label_ = 1;
};

template <SearchDomain D>
class RectangleSearch {
 public:
  using State = StateOf<D>;
  using Action = ActionOf<D>;
  using Key = KeyOf<D>;
  using N = NodeOf<D>;

  static constexpr std::size_t kBytesPerNode =
      sizeof(N) + sizeof(QueueEntry) + sizeof(std::pair<Key, Cost>) + 8;

  RectangleSearch(const D& dom, RectangleConfig cfg, SearchLog<Key>* log = nullptr)
      : dom_(dom), cfg_(cfg), log_(log), monitor_(cfg.limits, kBytesPerNode) {
    inc_.cost = cfg.initial_bound;
  }

  SearchResult<Action> run() {
    if (start()) {
      while (!open_.empty() && !monitor_.stopped()) {
        iterate();
        if (cfg_.max_iterations && iterations_ >= *cfg_.max_iterations && !open_.empty()) {
          monitor_.stop(TerminalStatus::iteration_limit);
          break;
        }
      }
    }
    return result();
  }

  // Handles the root: goal test, then expansion into the first level.
  // Returns false if nothing is left to do.
  bool start() {
    N root = make_root(dom_);
    root_ = pool_.add(root);
    monitor_.add_nodes();
    if (dom_.is_goal(root.state)) {
      if (cost_less(0, inc_.cost)) improve(root_);
      return false;
    }
    table_[dom_.key(root.state)] = 0;
    open_.push_back_level();
    expand(root_, 0);  // children go to the first level
    open_.trim();
    return !open_.empty();
  }

  // One pass of the main loop. Returns false once the open levels are empty.
  bool iterate() {
    const std::size_t n = open_.size();
    for (std::size_t i = 0; i + 1 < n && !monitor_.stopped(); ++i) select_and_expand(i);
    for (std::uint32_t a = 0; a < cfg_.aspect; ++a) open_.push_back_level();
    for (std::size_t j = n - 1; j + 1 < open_.size() && !monitor_.stopped(); ++j) {
      for (std::uint64_t k = 0; k < depth_; ++k) {
        // A level only gains nodes from its parent, which is idle here.
        if (open_[j].queue.empty() || monitor_.stopped()) break;
        select_and_expand(j);
      }
    }
    depth_ += cfg_.aspect;
    open_.trim();
    ++iterations_;
    stats_.iteration_ends.push_back(monitor_.expansions());
    return !open_.empty();
  }

  // Pops the best node of level i that can still lead to an improvement
  // and expands it. Returns whether an expansion happened.
  bool select_and_expand(std::size_t i) {
    auto& q = open_[i].queue;
    while (!q.empty()) {
      const QueueEntry e = q.pop();
      const N& n = pool_[e.id];
      if (!cost_less(n.f(), inc_.cost)) continue;
      if (auto it = table_.find(dom_.key(n.state)); it != table_.end() && cost_less(it->second, n.g))
        continue;
      if (!monitor_.begin_expansion()) return false;
      expand(e.id, i + 1);
      return true;
    }
    return false;
  }

  const OpenLevels& open() const noexcept { return open_; }
  const Incumbent& incumbent() const noexcept { return inc_; }
  std::uint64_t iterations() const noexcept { return iterations_; }
  const RunMonitor& monitor() const noexcept { return monitor_; }

  SearchResult<Action> result() {
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
  void expand(NodeId id, std::size_t target) {
    const N parent = pool_[id];
    if (log_) log_->push_back({parent.depth, 0, dom_.key(parent.state), false});
    generate(dom_, parent.state, succ_);
    monitor_.add_generated(succ_.size());
    for (auto& s : succ_) {
      const Cost g = parent.g + s.cost;
      if (!cost_less(g + s.h, inc_.cost)) continue;
      if (dom_.is_goal(s.state)) {
        improve(add_child(parent, id, s, g));
        continue;
      }
      auto [it, inserted] = table_.try_emplace(dom_.key(s.state), g);
      if (!inserted) {
        if (!cost_less(g, it->second)) continue;
        it->second = g;
      }
      const NodeId c = add_child(parent, id, s, g);
      open_[target].queue.push(make_entry(pool_[c], c, cfg_.ordering));
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
    inc_.found_at_ms = monitor_.elapsed_ms();
    monitor_.report_incumbent(inc_.cost);
  }

  const D& dom_;
  RectangleConfig cfg_;
  SearchLog<Key>* log_;
  RunMonitor monitor_;
  NodePool<N> pool_;
  OpenLevels open_;
  absl::flat_hash_map<Key, Cost> table_;
  std::vector<SuccessorOf<D>> succ_;
  Incumbent inc_;
  NodeId root_ = kNoNode;
  std::uint64_t depth_ = 1;
  std::uint64_t iterations_ = 0;
  SearchStats stats_;
};

template <SearchDomain D>
SearchResult<ActionOf<D>> rectangle_search(const D& dom, const RectangleConfig& cfg = {},
                                           SearchLog<KeyOf<D>>* log = nullptr) {
  return RectangleSearch<D>(dom, cfg, log).run();
}

}  // namespace rectsearch
