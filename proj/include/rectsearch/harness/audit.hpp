#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rectsearch/domains/generate.hpp"
#include "rectsearch/harness/oracle.hpp"

namespace rectsearch {

// The same domain with every action costing 1, for counting actions.
template <SearchDomain D>
class UnitCostView {
 public:
  using State = StateOf<D>;
  using Action = ActionOf<D>;
  using Key = KeyOf<D>;

  explicit UnitCostView(const D& dom) : dom_(dom) {}

  State initial_state() const { return dom_.initial_state(); }
  void successors(const State& s, std::vector<Successor<State, Action>>& out) const {
    const std::size_t first = out.size();
    dom_.successors(s, out);
    for (std::size_t i = first; i < out.size(); ++i) out[i].cost = 1;
  }
  bool is_goal(const State& s) const { return dom_.is_goal(s); }
  Cost h(const State& s) const { return dom_.d(s); }
  double d(const State& s) const { return dom_.d(s); }
  Key key(const State& s) const { return dom_.key(s); }

 private:
  const D& dom_;
};

// States visited by a random walk of up to `max_walk` steps from the
// initial state, one walk per sample.
template <SearchDomain D>
std::vector<StateOf<D>> sample_states(const D& dom, Rng& rng, std::size_t count,
                                      std::size_t max_walk) {
  std::vector<StateOf<D>> out;
  std::vector<SuccessorOf<D>> succ;
  while (out.size() < count) {
    StateOf<D> s = dom.initial_state();
    const std::size_t steps = below(rng, max_walk + 1);
    for (std::size_t i = 0; i < steps; ++i) {
      succ.clear();
      dom.successors(s, succ);
      if (succ.empty()) break;
      s = succ[below(rng, succ.size())].state;
    }
    out.push_back(s);
  }
  return out;
}

struct AuditResult {
  std::size_t checked = 0;
  std::size_t h_violations = 0;
  std::size_t d_violations = 0;
  double max_h_excess = 0;  // largest h(s) - optimal(s) seen
};

// Compares h(s) with the oracle cost and, optionally, d(s) with the
// oracle action count for each state.
template <SearchDomain D>
AuditResult audit_heuristics(const D& dom, const std::vector<StateOf<D>>& states, bool check_d,
                             double slack = 1e-9) {
  AuditResult r;
  const UnitCostView<D> unit(dom);
  for (const auto& s : states) {
    const Cost opt = oracle_optimal(dom, s);
    if (opt == kInfiniteCost) continue;  // dead end: nothing to compare against
    ++r.checked;
    const double excess = dom.h(s) - opt;
    r.max_h_excess = std::max(r.max_h_excess, excess);
    if (excess > slack) ++r.h_violations;
    if (check_d && dom.d(s) > oracle_optimal(unit, s) + slack) ++r.d_violations;
  }
  return r;
}

}  // namespace rectsearch
