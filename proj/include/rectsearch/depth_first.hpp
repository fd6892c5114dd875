#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "rectsearch/result.hpp"

namespace rectsearch {

struct DfsStarConfig {
  bool order_children = true;  // visit children by f, then d
  Limits limits{};
};

namespace detail {

// Shared plumbing for the tree searches: the current path, its states
// (for cycle checks), per-depth successor buffers and the incumbent.
template <SearchDomain D>
class PathSearch {
 protected:
  using State = StateOf<D>;
  using Action = ActionOf<D>;
  using Key = KeyOf<D>;

  PathSearch(const D& dom, Limits limits) : dom_(dom), monitor_(limits, sizeof(State) + 64) {}

  std::vector<SuccessorOf<D>>& buffer(std::size_t depth) {
    if (buffers_.size() <= depth) buffers_.resize(depth + 1);
    return buffers_[depth];
  }

  bool on_path(const Key& k) const { return path_keys_.contains(k); }
  void push(const Key& k, const Action& a) {
    path_keys_.insert(k);
    path_.push_back(a);
    monitor_.add_nodes();
  }
  void pop(const Key& k) {
    path_keys_.erase(k);
    path_.pop_back();
    monitor_.remove_nodes();
  }

  void improve(Cost g, const Action& last) {
    inc_ = g;
    plan_ = path_;
    plan_.push_back(last);
    monitor_.report_incumbent(g);
  }

  SearchResult<Action> result() {
    SearchResult<Action> r;
    r.trace = monitor_.finish(TerminalStatus::exhausted_optimal);
    r.stats = stats_;
    if (inc_ < kInfiniteCost) {
      r.plan = plan_;
      r.plan_cost = inc_;
    }
    return r;
  }

  const D& dom_;
  RunMonitor monitor_;
  Cost inc_ = kInfiniteCost;
  std::vector<Action> plan_;
  std::vector<Action> path_;
  absl::flat_hash_set<Key> path_keys_;
  std::vector<std::vector<SuccessorOf<D>>> buffers_;
  SearchStats stats_;
};

}  // namespace detail

// Depth-first search with a cost bound that starts at h(start) and
// doubles each iteration until a solution is found, then a
// branch-and-bound pass pruned only by the incumbent.
template <SearchDomain D>
class DfsStar : detail::PathSearch<D> {
  using Base = detail::PathSearch<D>;
  using typename Base::State;

 public:
  DfsStar(const D& dom, DfsStarConfig cfg) : Base(dom, cfg.limits), cfg_(cfg) {}

  SearchResult<ActionOf<D>> run() {
    const State root = this->dom_.initial_state();
    if (this->dom_.is_goal(root)) {
      this->inc_ = 0;
      this->monitor_.report_incumbent(0);
      return this->result();
    }
    Cost bound = this->dom_.h(root);
    if (!(bound > 0)) {
      std::vector<SuccessorOf<D>> first;
      generate(this->dom_, root, first);
      bound = kInfiniteCost;
      for (const auto& s : first) bound = std::min(bound, s.cost);
      if (bound == kInfiniteCost) return this->result();
    }
    const auto root_key = this->dom_.key(root);
    this->path_keys_.insert(root_key);
    for (;;) {
      this->stats_.bounds.push_back(bound);
      cut_ = false;
      stop_on_solution_ = true;
      visit(root, 0, 0, bound);
      this->stats_.iteration_ends.push_back(this->monitor_.expansions());
      if (this->monitor_.stopped()) return this->result();
      if (this->inc_ < kInfiniteCost) break;
      if (!cut_) return this->result();
      bound *= 2;
    }
    stop_on_solution_ = false;
    this->stats_.bounds.push_back(kInfiniteCost);
    visit(root, 0, 0, kInfiniteCost);
    this->stats_.iteration_ends.push_back(this->monitor_.expansions());
    return this->result();
  }

 private:
  // Returns false when the whole search must unwind.
  bool visit(const State& s, Cost g, std::size_t depth, Cost bound) {
    if (!this->monitor_.begin_expansion()) return false;
    auto& kids = this->buffer(depth);
    generate(this->dom_, s, kids);
    this->monitor_.add_generated(kids.size());
    if (cfg_.order_children) {
      std::stable_sort(kids.begin(), kids.end(), [g](const auto& a, const auto& b) {
        const Cost fa = g + a.cost + a.h, fb = g + b.cost + b.h;
        if (fa != fb) return fa < fb;
        return a.d < b.d;
      });
    }
    for (std::size_t i = 0; i < this->buffers_[depth].size(); ++i) {
      // Deeper calls may grow buffers_, which invalidates `kids`.
      auto& c = this->buffers_[depth][i];
      const Cost gc = g + c.cost;
      if (!cost_less(gc + c.h, this->inc_)) continue;
      if (cost_less(bound, gc + c.h)) {
        cut_ = true;
        continue;
      }
      if (this->dom_.is_goal(c.state)) {
        this->improve(gc, c.action);
        if (stop_on_solution_) return false;
        continue;
      }
      const auto k = this->dom_.key(c.state);
      if (this->on_path(k)) continue;
      this->push(k, c.action);
      const State next = this->buffers_[depth][i].state;
      const bool go_on = visit(next, gc, depth + 1, bound);
      this->pop(k);
      if (!go_on) return false;
    }
    return true;
  }

  DfsStarConfig cfg_;
  bool cut_ = false;
  bool stop_on_solution_ = true;
};

template <SearchDomain D>
SearchResult<ActionOf<D>> dfs_star_search(const D& dom, const DfsStarConfig& cfg = {}) {
  return DfsStar<D>(dom, cfg).run();
}

struct IldsConfig {
  Limits limits{};
};

// Improved limited discrepancy search with a depth bound. Children are
// ranked by d (then f, then generation order); iteration k of a sweep
// explores the paths with exactly k non-preferred choices. Sweeps repeat
// with a doubled depth bound while nodes were cut at the bound.
template <SearchDomain D>
class IldsStar : detail::PathSearch<D> {
  using Base = detail::PathSearch<D>;
  using typename Base::State;

 public:
  // For every expansion, `audit` (if given) receives the sweep's
  // discrepancy allowance and the number of non-preferred moves on the
  // path to the expanded node.
  using Audit = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

  IldsStar(const D& dom, IldsConfig cfg, Audit* audit = nullptr)
      : Base(dom, cfg.limits), audit_(audit) {}

  SearchResult<ActionOf<D>> run() {
    const State root = this->dom_.initial_state();
    if (this->dom_.is_goal(root)) {
      this->inc_ = 0;
      this->monitor_.report_incumbent(0);
      return this->result();
    }
    this->path_keys_.insert(this->dom_.key(root));
    std::uint64_t bound = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(this->dom_.d(root) - 1e-9)));
    for (;;) {
      this->stats_.bounds.push_back(static_cast<Cost>(bound));
      depth_cut_ = kInfiniteCost;
      for (std::uint64_t k = 0;; ++k) {
        discrepancy_cut_ = kInfiniteCost;
        sweep_ = k;
        visit(root, 0, 0, k, bound);
        this->stats_.iteration_ends.push_back(this->monitor_.expansions());
        if (this->monitor_.stopped()) return this->result();
        if (!cost_less(discrepancy_cut_, this->inc_)) break;
      }
      if (!cost_less(depth_cut_, this->inc_)) break;
      bound *= 2;
    }
    return this->result();
  }

 private:
  bool visit(const State& s, Cost g, std::size_t depth, std::uint64_t budget,
             std::uint64_t remaining) {
    if (!this->monitor_.begin_expansion()) return false;
    if (audit_) audit_->emplace_back(sweep_, std::count(taken_.begin(), taken_.end(), true));
    auto& kids = this->buffer(depth);
    generate(this->dom_, s, kids);
    this->monitor_.add_generated(kids.size());
    std::erase_if(kids, [&](const auto& c) { return this->on_path(this->dom_.key(c.state)); });
    std::stable_sort(kids.begin(), kids.end(), [g](const auto& a, const auto& b) {
      if (a.d != b.d) return a.d < b.d;
      return g + a.cost + a.h < g + b.cost + b.h;
    });
    // Goals are recognised when generated, whatever their rank.
    for (const auto& c : kids)
      if (this->dom_.is_goal(c.state) && cost_less(g + c.cost, this->inc_))
        this->improve(g + c.cost, c.action);
    const std::size_t n = kids.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = this->buffers_[depth][i];
      const Cost gc = g + c.cost;
      if (this->dom_.is_goal(c.state) || !cost_less(gc + c.h, this->inc_)) continue;
      const bool preferred = i == 0;
      if (preferred ? remaining <= budget : budget == 0) {
        if (!preferred) discrepancy_cut_ = std::min(discrepancy_cut_, gc + c.h);
        continue;
      }
      if (remaining == 1) {
        depth_cut_ = std::min(depth_cut_, gc + c.h);
        continue;
      }
      const auto k = this->dom_.key(c.state);
      const auto a = c.action;
      const State next = c.state;
      this->push(k, a);
      taken_.push_back(!preferred);
      const bool go_on = visit(next, gc, depth + 1, preferred ? budget : budget - 1, remaining - 1);
      taken_.pop_back();
      this->pop(k);
      if (!go_on) return false;
    }
    return true;
  }

  Audit* audit_;
  std::vector<bool> taken_;  // non-preferred moves along the current path
  std::uint64_t sweep_ = 0;
  Cost discrepancy_cut_ = kInfiniteCost;
  Cost depth_cut_ = kInfiniteCost;
};

template <SearchDomain D>
SearchResult<ActionOf<D>> ilds_star_search(const D& dom, const IldsConfig& cfg = {}) {
  return IldsStar<D>(dom, cfg).run();
}

}  // namespace rectsearch
