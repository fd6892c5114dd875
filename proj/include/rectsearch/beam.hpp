#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "rectsearch/ordering.hpp"
#include "rectsearch/result.hpp"

namespace rectsearch {

struct BeamConfig {
  std::uint32_t width = 1;
  Ordering ordering{OrderKey::d};
  Limits limits{};
};

namespace detail {

// One layered beam pass shared by plain beam search and each CABS
// iteration. Children are deduplicated within the layer (best g wins) and
// against the states already kept in this pass.
template <SearchDomain D>
class BeamPass {
 public:
  using N = NodeOf<D>;
  using Key = KeyOf<D>;

  static constexpr std::size_t kBytesPerNode = sizeof(N) + 2 * sizeof(std::pair<Key, Cost>) + 16;

  BeamPass(const D& dom, NodePool<N>& pool, RunMonitor& monitor, Incumbent& inc)
      : dom_(dom), pool_(pool), monitor_(monitor), inc_(inc) {}

  // Runs from `root`. With `stop_at_goal`, returns at the first goal
  // generated; otherwise prunes on the incumbent and runs until the beam
  // empties. Returns the smallest f among children left out of the beam.
  Cost run(NodeId root, std::uint32_t width, Ordering ord, bool stop_at_goal) {
    closed_.clear();
    closed_[dom_.key(pool_[root].state)] = 0;
    std::vector<NodeId> layer{root};
    std::vector<NodeId> cand;
    absl::flat_hash_map<Key, std::size_t> where;
    Cost excluded = kInfiniteCost;
    while (!layer.empty()) {
      cand.clear();
      where.clear();
      for (NodeId id : layer) {
        if (!stop_at_goal && !cost_less(pool_[id].f(), inc_.cost)) continue;
        if (!monitor_.begin_expansion()) return excluded;
        const N parent = pool_[id];
        generate(dom_, parent.state, succ_);
        monitor_.add_generated(succ_.size());
        for (auto& s : succ_) {
          const Cost g = parent.g + s.cost;
          if (!stop_at_goal && !cost_less(g + s.h, inc_.cost)) continue;
          if (dom_.is_goal(s.state)) {
            if (cost_less(g, inc_.cost)) {
              improve(add_child(parent, id, s, g));
              if (stop_at_goal) return excluded;
            }
            continue;
          }
          const Key k = dom_.key(s.state);
          if (auto it = closed_.find(k); it != closed_.end() && !cost_less(g, it->second)) continue;
          auto [w, fresh] = where.try_emplace(k, cand.size());
          if (fresh) {
            cand.push_back(add_child(parent, id, s, g));
          } else if (cost_less(g, pool_[cand[w->second]].g)) {
            cand[w->second] = add_child(parent, id, s, g);
          }
        }
      }
      auto before = [&](NodeId a, NodeId b) { return compare(pool_[a], a, pool_[b], b, ord) < 0; };
      if (cand.size() > width) {
        std::nth_element(cand.begin(), cand.begin() + width, cand.end(), before);
        for (std::size_t i = width; i < cand.size(); ++i)
          excluded = std::min(excluded, pool_[cand[i]].f());
        cand.resize(width);
      }
      std::sort(cand.begin(), cand.end(), before);
      for (NodeId id : cand) closed_[dom_.key(pool_[id].state)] = pool_[id].g;
      layer.swap(cand);
    }
    return excluded;
  }

 private:
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

  const D& dom_;
  NodePool<N>& pool_;
  RunMonitor& monitor_;
  Incumbent& inc_;
  absl::flat_hash_map<Key, Cost> closed_;
  std::vector<SuccessorOf<D>> succ_;
};

template <class N, class Action>
void fill_plan(SearchResult<Action>& r, const NodePool<N>& pool, const Incumbent& inc) {
  if (inc.goal == kNoNode) return;
  auto p = reconstruct_path(pool, inc.goal);
  r.plan = std::move(p.actions);
  r.plan_cost = p.cost;
}

}  // namespace detail

// Layered beam search that stops at the first goal it generates. An empty
// beam ends the run with no solution.
template <SearchDomain D>
SearchResult<ActionOf<D>> beam_search(const D& dom, const BeamConfig& cfg) {
  using N = NodeOf<D>;
  RunMonitor monitor(cfg.limits, detail::BeamPass<D>::kBytesPerNode);
  NodePool<N> pool;
  Incumbent inc;
  SearchResult<ActionOf<D>> r;
  const NodeId root = pool.add(make_root(dom));
  monitor.add_nodes();
  if (dom.is_goal(pool[root].state)) {
    inc = {0, root, 0, 0};
    monitor.report_incumbent(0);
  } else if (cfg.width > 0) {
    detail::BeamPass<D>(dom, pool, monitor, inc).run(root, cfg.width, cfg.ordering, true);
  }
  r.trace = monitor.finish(inc.exists() ? TerminalStatus::first_solution
                                        : TerminalStatus::exhausted_optimal);
  detail::fill_plan(r, pool, inc);
  return r;
}

// Beam search ordered on d.
template <SearchDomain D>
SearchResult<ActionOf<D>> bead_search(const D& dom, std::uint32_t width, Limits limits = {}) {
  return beam_search(dom, BeamConfig{width, Ordering{OrderKey::d}, limits});
}

struct CabsConfig {
  Ordering ordering{OrderKey::d};
  Limits limits{};
  std::uint32_t initial_width = 1;
};

// Complete anytime beam search: full beam passes with widths 1, 2, 4, ...
// pruned on the incumbent, until no node left out of a beam could lead
// to a cheaper solution.
template <SearchDomain D>
SearchResult<ActionOf<D>> cabs_search(const D& dom, const CabsConfig& cfg = {}) {
  using N = NodeOf<D>;
  RunMonitor monitor(cfg.limits, detail::BeamPass<D>::kBytesPerNode);
  NodePool<N> pool;
  Incumbent inc;
  SearchResult<ActionOf<D>> r;
  const NodeId root = pool.add(make_root(dom));
  monitor.add_nodes();
  if (dom.is_goal(pool[root].state)) {
    inc = {0, root, 0, 0};
    monitor.report_incumbent(0);
  } else {
    detail::BeamPass<D> pass(dom, pool, monitor, inc);
    std::uint64_t width = std::max<std::uint32_t>(1, cfg.initial_width);
    while (!monitor.stopped()) {
      const Cost excluded =
          pass.run(root, static_cast<std::uint32_t>(std::min<std::uint64_t>(width, 0xffffffffu)),
                   cfg.ordering, false);
      r.stats.iteration_ends.push_back(monitor.expansions());
      if (monitor.stopped() || !cost_less(excluded, inc.cost)) break;
      width *= 2;
    }
  }
  r.trace = monitor.finish(TerminalStatus::exhausted_optimal);
  detail::fill_plan(r, pool, inc);
  return r;
}

}  // namespace rectsearch
