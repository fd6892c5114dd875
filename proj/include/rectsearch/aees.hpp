#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "rectsearch/ordering.hpp"
#include "rectsearch/result.hpp"

namespace rectsearch {

// Running means of the one-step heuristic errors, taken from the best
// child of each expansion.
class ErrorModel {
 public:
  void add(double h_error, double d_error) {
    ++n_;
    h_sum_ += h_error;
    d_sum_ += d_error;
  }
  double eps_h() const { return n_ == 0 ? 0.0 : std::max(0.0, h_sum_ / n_); }
  double eps_d() const {
    return n_ == 0 ? 0.0 : std::clamp(d_sum_ / n_, 0.0, 1.0 - 1e-6);
  }
  double d_hat(double d) const { return d / (1 - eps_d()); }
  Cost f_hat(Cost g, Cost h, double d) const { return g + h + eps_h() * d_hat(d); }

 private:
  std::uint64_t n_ = 0;
  double h_sum_ = 0;
  double d_sum_ = 0;
};

// Anytime explicit estimation search. Three views of the open list:
// by f-hat (corrected cost), by f (lower bound) and a focal list by
// d-hat holding the nodes whose f-hat is within w times the best f-hat,
// where w = incumbent / f_min shrinks as solutions improve.
template <SearchDomain D>
class AeesSearch {
 public:
  using N = NodeOf<D>;
  using Key = KeyOf<D>;

  static constexpr std::size_t kBytesPerNode =
      sizeof(N) + 4 * sizeof(QueueEntry) + 48 + sizeof(std::pair<Key, NodeId>) + 24;

  // `lower_bounds`, if given, receives f_min at every selection.
  explicit AeesSearch(const D& dom, Limits limits = {}, std::vector<Cost>* lower_bounds = nullptr)
      : dom_(dom), monitor_(limits, kBytesPerNode), lower_bounds_(lower_bounds) {}

  SearchResult<ActionOf<D>> run() {
    N root = make_root(dom_);
    const NodeId rid = add(root, root.d);
    if (dom_.is_goal(root.state)) {
      improve(rid);
    } else {
      best_[dom_.key(root.state)] = rid;
      insert(rid);
      while (!monitor_.stopped()) {
        const NodeId id = select();
        if (id == kNoNode) break;
        remove(id);
        if (!monitor_.begin_expansion()) break;
        expand(id);
      }
    }
    SearchResult<ActionOf<D>> r;
    r.trace = monitor_.finish(TerminalStatus::exhausted_optimal);
    if (inc_.goal != kNoNode) {
      auto p = reconstruct_path(pool_, inc_.goal);
      r.plan = std::move(p.actions);
      r.plan_cost = p.cost;
    }
    return r;
  }

 private:
  struct Extra {
    Cost f_hat = 0;
    double d_hat = 0;
    bool open = false;
    bool focal = false;
  };

  struct FhatKey {
    Cost f_hat;
    Cost f;
    NodeId id;
    friend bool operator<(const FhatKey& a, const FhatKey& b) {
      if (a.f_hat != b.f_hat) return a.f_hat < b.f_hat;
      if (a.f != b.f) return a.f < b.f;
      return a.id < b.id;
    }
  };

  FhatKey fkey(NodeId id) const { return {extra_[id].f_hat, pool_[id].f(), id}; }

  void insert(NodeId id) {
    extra_[id].open = true;
    by_fhat_.insert(fkey(id));
    by_f_.push({pool_[id].f(), pool_[id].h, id});
    if (extra_[id].f_hat < focal_bound_)
      to_focal(id);
    else if (extra_[id].f_hat < scanned_to_)
      parked_.push({extra_[id].f_hat, 0, id});
  }

  void to_focal(NodeId id) {
    extra_[id].focal = true;
    focal_.push({extra_[id].d_hat, pool_[id].f(), id});
  }

  void remove(NodeId id) {
    if (!extra_[id].open) return;
    extra_[id].open = false;
    extra_[id].focal = false;
    by_fhat_.erase(fkey(id));
  }

  // Smallest f on open; pops stale heap entries.
  Cost f_min() {
    while (!by_f_.empty() && !extra_[by_f_.top().id].open) by_f_.pop();
    return by_f_.empty() ? kInfiniteCost : by_f_.top().primary;
  }

  // Open nodes with f-hat below scanned_to_ are either on focal or
  // parked, so a rising bound only walks by_fhat_ past that mark.
  void set_focal_bound(Cost bound) {
    if (bound > focal_bound_) {
      while (!parked_.empty() && parked_.top().primary < bound) {
        const NodeId id = parked_.pop().id;
        if (extra_[id].open && !extra_[id].focal) to_focal(id);
      }
      if (bound > scanned_to_) {
        for (auto it = by_fhat_.lower_bound({scanned_to_, -kInfiniteCost, 0});
             it != by_fhat_.end() && it->f_hat < bound; ++it)
          if (!extra_[it->id].focal) to_focal(it->id);
        scanned_to_ = bound;
      }
    }
    focal_bound_ = bound;
  }

  NodeId select() {
    // Nodes that cannot beat the incumbent are dropped as they surface.
    while (!by_fhat_.empty() && !cost_less(by_fhat_.begin()->f, inc_.cost))
      remove(by_fhat_.begin()->id);
    const Cost fmin = f_min();
    if (!cost_less(fmin, inc_.cost)) return kNoNode;
    if (lower_bounds_) lower_bounds_->push_back(fmin);
    const double w = (inc_.exists() && fmin > 0) ? inc_.cost / fmin : kInfiniteCost;
    const FhatKey best = *by_fhat_.begin();
    set_focal_bound(w == kInfiniteCost ? kInfiniteCost : w * best.f_hat);
    // w * f_min is the incumbent cost itself.
    const Cost threshold = inc_.cost;
    while (!focal_.empty()) {
      const NodeId id = focal_.top().id;
      if (!extra_[id].open || !extra_[id].focal) {
        focal_.pop();
        continue;
      }
      if (!cost_less(pool_[id].f(), inc_.cost)) {
        extra_[id].focal = false;
        focal_.pop();
        continue;
      }
      if (extra_[id].f_hat >= focal_bound_) {
        extra_[id].focal = false;
        focal_.pop();
        parked_.push({extra_[id].f_hat, 0, id});
        continue;
      }
      break;
    }
    if (!focal_.empty() && extra_[focal_.top().id].f_hat <= threshold) return focal_.top().id;
    if (best.f_hat <= threshold) return best.id;
    f_min();
    return by_f_.top().id;
  }

  void expand(NodeId id) {
    const N parent = pool_[id];
    generate(dom_, parent.state, succ_);
    monitor_.add_generated(succ_.size());
    const SuccessorOf<D>* best_child = nullptr;
    Cost best_fhat = kInfiniteCost;
    for (const auto& s : succ_) {
      const Cost fh = errors_.f_hat(parent.g + s.cost, s.h, s.d);
      if (fh < best_fhat) {
        best_fhat = fh;
        best_child = &s;
      }
    }
    if (best_child)
      errors_.add(best_child->h + best_child->cost - parent.h, best_child->d + 1 - parent.d);
    for (auto& s : succ_) {
      const Cost g = parent.g + s.cost;
      if (!cost_less(g + s.h, inc_.cost)) continue;
      N c;
      c.g = g;
      c.h = s.h;
      c.d = static_cast<float>(s.d);
      c.depth = parent.depth + 1;
      c.parent = id;
      c.action = s.action;
      if (dom_.is_goal(s.state)) {
        c.state = std::move(s.state);
        improve(add(c, s.d));
        continue;
      }
      auto [it, fresh] = best_.try_emplace(dom_.key(s.state), kNoNode);
      if (!fresh) {
        if (!cost_less(g, pool_[it->second].g)) continue;
        remove(it->second);
      }
      c.state = std::move(s.state);
      const NodeId cid = add(c, s.d);
      it->second = cid;
      insert(cid);
    }
  }

  NodeId add(const N& n, double d) {
    monitor_.add_nodes();
    const NodeId id = pool_.add(n);
    extra_.push_back({errors_.f_hat(n.g, n.h, d), errors_.d_hat(d), false, false});
    return id;
  }

  void improve(NodeId goal) {
    inc_.cost = pool_[goal].g;
    inc_.goal = goal;
    inc_.found_after_expansions = monitor_.expansions();
    monitor_.report_incumbent(inc_.cost);
  }

  const D& dom_;
  RunMonitor monitor_;
  std::vector<Cost>* lower_bounds_;
  NodePool<N> pool_;
  std::vector<Extra> extra_;
  std::set<FhatKey> by_fhat_;
  NodeQueue by_f_;
  NodeQueue focal_;
  NodeQueue parked_;  // dropped from focal by a falling bound, by f-hat
  Cost focal_bound_ = 0;
  Cost scanned_to_ = 0;
  absl::flat_hash_map<Key, NodeId> best_;
  ErrorModel errors_;
  std::vector<SuccessorOf<D>> succ_;
  Incumbent inc_;
};

template <SearchDomain D>
SearchResult<ActionOf<D>> aees_search(const D& dom, Limits limits = {}) {
  return AeesSearch<D>(dom, limits).run();
}

}  // namespace rectsearch
