#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "rectsearch/ordering.hpp"
#include "rectsearch/result.hpp"

namespace rectsearch {

// Weights used by ARA*: either an explicit non-increasing list ending in 1,
// or w_k = max(1, w_0 - k * step).
class WeightSchedule {
 public:
  static WeightSchedule list(std::vector<double> weights) {
    if (weights.empty()) throw std::invalid_argument("weight schedule is empty");
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!(weights[i] >= 1)) throw std::invalid_argument("weights must be >= 1");
      if (i > 0 && weights[i] > weights[i - 1])
        throw std::invalid_argument("weights must not increase");
    }
    if (weights.back() != 1) throw std::invalid_argument("weight schedule must end at 1");
    WeightSchedule s;
    s.list_ = std::move(weights);
    return s;
  }
  static WeightSchedule decrement(double initial, double step) {
    if (!(initial >= 1)) throw std::invalid_argument("initial weight must be >= 1");
    if (!(step > 0)) throw std::invalid_argument("weight step must be positive");
    WeightSchedule s;
    s.initial_ = initial;
    s.step_ = step;
    return s;
  }

  // Weight after k solutions.
  double weight(std::uint64_t k) const {
    if (!list_.empty()) return list_[std::min<std::uint64_t>(k, list_.size() - 1)];
    const double w = initial_ - step_ * static_cast<double>(k);
    return w <= 1 + 1e-9 ? 1.0 : w;
  }

 private:
  std::vector<double> list_;
  double initial_ = 1;
  double step_ = 1;
};

enum class BestFirstMode {
  one_shot,  // stop at the first goal expanded
  anytime,   // keep searching with incumbent pruning until open is empty
  restarting_weights,  // anytime, lowering the weight after each solution
};

struct BestFirstConfig {
  double weight = 1;
  bool greedy = false;  // order on h alone
  BestFirstMode mode = BestFirstMode::one_shot;
  WeightSchedule schedule = WeightSchedule::list({1});
  Limits limits{};
};

namespace detail {

// Best-first search over f' = g + w*h (or h alone) with duplicate
// detection, reopening and goal test at expansion.
template <SearchDomain D>
class BestFirst {
 public:
  using N = NodeOf<D>;
  using Key = KeyOf<D>;

  static constexpr std::size_t kBytesPerNode =
      sizeof(N) + sizeof(QueueEntry) + sizeof(std::pair<Key, NodeId>) + 8;

  BestFirst(const D& dom, const BestFirstConfig& cfg)
      : dom_(dom), cfg_(cfg), monitor_(cfg.limits, kBytesPerNode) {
    weight_ = cfg.mode == BestFirstMode::restarting_weights ? cfg.schedule.weight(0) : cfg.weight;
  }

  SearchResult<ActionOf<D>> run() {
    const NodeId root = add(make_root(dom_));
    best_[dom_.key(pool_[root].state)] = root;
    open_.push(entry(root));
    TerminalStatus natural = TerminalStatus::exhausted_optimal;
    while (!open_.empty()) {
      const NodeId id = open_.pop().id;
      const N& n = pool_[id];
      if (best_[dom_.key(n.state)] != id) continue;
      if (!cost_less(n.f(), inc_.cost)) continue;
      if (dom_.is_goal(n.state)) {
        improve(id);
        if (cfg_.mode == BestFirstMode::one_shot) {
          natural = TerminalStatus::first_solution;
          break;
        }
        if (cfg_.mode == BestFirstMode::restarting_weights) {
          stats_.weights.push_back(weight_);
          if (weight_ == 1) break;  // solution under w = 1 is optimal
          weight_ = cfg_.schedule.weight(++solutions_);
          rekey();
        }
        continue;
      }
      if (!monitor_.begin_expansion()) break;
      expand(id);
      if (monitor_.stopped()) break;
    }
    SearchResult<ActionOf<D>> r;
    r.trace = monitor_.finish(natural);
    r.stats = stats_;
    if (inc_.goal != kNoNode) {
      auto p = reconstruct_path(pool_, inc_.goal);
      r.plan = std::move(p.actions);
      r.plan_cost = p.cost;
    }
    return r;
  }

 private:
  QueueEntry entry(NodeId id) const {
    const N& n = pool_[id];
    if (cfg_.greedy) return {n.h, n.f(), id};
    return {n.g + weight_ * n.h, n.h, id};
  }

  void expand(NodeId id) {
    const N parent = pool_[id];
    generate(dom_, parent.state, succ_);
    monitor_.add_generated(succ_.size());
    for (auto& s : succ_) {
      const Cost g = parent.g + s.cost;
      if (!cost_less(g + s.h, inc_.cost)) continue;
      auto [it, fresh] = best_.try_emplace(dom_.key(s.state), kNoNode);
      if (!fresh && !cost_less(g, pool_[it->second].g)) continue;
      N c;
      c.state = std::move(s.state);
      c.g = g;
      c.h = s.h;
      c.d = static_cast<float>(s.d);
      c.depth = parent.depth + 1;
      c.parent = id;
      c.action = s.action;
      const NodeId cid = add(c);
      it->second = cid;
      open_.push(entry(cid));
    }
  }

  // Recomputes priorities under the current weight, dropping stale and
  // pruned entries.
  void rekey() {
    auto& v = open_.entries();
    std::vector<QueueEntry> kept;
    kept.reserve(v.size());
    for (const auto& e : v) {
      const N& n = pool_[e.id];
      if (best_[dom_.key(n.state)] != e.id || !cost_less(n.f(), inc_.cost)) continue;
      kept.push_back(entry(e.id));
    }
    v.swap(kept);
    open_.rebuild();
  }

  NodeId add(const N& n) {
    monitor_.add_nodes();
    return pool_.add(n);
  }

  void improve(NodeId goal) {
    inc_.cost = pool_[goal].g;
    inc_.goal = goal;
    inc_.found_after_expansions = monitor_.expansions();
    monitor_.report_incumbent(inc_.cost);
  }

  const D& dom_;
  BestFirstConfig cfg_;
  RunMonitor monitor_;
  NodePool<N> pool_;
  NodeQueue open_;
  absl::flat_hash_map<Key, NodeId> best_;
  std::vector<SuccessorOf<D>> succ_;
  Incumbent inc_;
  double weight_ = 1;
  std::uint64_t solutions_ = 0;
  SearchStats stats_;
};

}  // namespace detail

// Weighted A*: stops at the first goal expanded. w = 1 is A*.
template <SearchDomain D>
SearchResult<ActionOf<D>> wastar_search(const D& dom, double weight, Limits limits = {}) {
  if (!(weight >= 1)) throw std::invalid_argument("weight must be >= 1");
  BestFirstConfig cfg;
  cfg.weight = weight;
  cfg.limits = limits;
  return detail::BestFirst<D>(dom, cfg).run();
}

// Greedy best-first search on h.
template <SearchDomain D>
SearchResult<ActionOf<D>> gbfs_search(const D& dom, Limits limits = {}) {
  BestFirstConfig cfg;
  cfg.greedy = true;
  cfg.limits = limits;
  return detail::BestFirst<D>(dom, cfg).run();
}

// Anytime weighted A*: keeps the incumbent and continues until open is
// exhausted, pruning nodes whose f reaches the incumbent cost.
template <SearchDomain D>
SearchResult<ActionOf<D>> awastar_search(const D& dom, double weight, Limits limits = {}) {
  if (!(weight >= 1)) throw std::invalid_argument("weight must be >= 1");
  BestFirstConfig cfg;
  cfg.weight = weight;
  cfg.mode = BestFirstMode::anytime;
  cfg.limits = limits;
  return detail::BestFirst<D>(dom, cfg).run();
}

// Anytime repairing A*: after each solution the weight steps down the
// schedule and open is re-sorted. Ends after a solution under w = 1 or
// when open is exhausted.
template <SearchDomain D>
SearchResult<ActionOf<D>> arastar_search(const D& dom, const WeightSchedule& schedule,
                                         Limits limits = {}) {
  BestFirstConfig cfg;
  cfg.mode = BestFirstMode::restarting_weights;
  cfg.schedule = schedule;
  cfg.limits = limits;
  return detail::BestFirst<D>(dom, cfg).run();
}

}  // namespace rectsearch
