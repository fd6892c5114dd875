#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectsearch/cost.hpp"

namespace rectsearch {

// One outgoing edge. Domains fill in h and d of the successor so that
// algorithms never have to call back into the domain for them.
template <class State, class Action>
struct Successor {
  State state;
  Action action;
  Cost cost;
  Cost h;
  double d;
};

template <class D>
concept SearchDomain =
    requires(const D& dom, const typename D::State& s,
             std::vector<Successor<typename D::State, typename D::Action>>& out) {
      typename D::State;
      typename D::Action;
      typename D::Key;
      { dom.initial_state() } -> std::convertible_to<typename D::State>;
      dom.successors(s, out);
      { dom.is_goal(s) } -> std::convertible_to<bool>;
      { dom.h(s) } -> std::convertible_to<Cost>;
      { dom.d(s) } -> std::convertible_to<double>;
      { dom.key(s) } -> std::convertible_to<typename D::Key>;
    } && std::equality_comparable<typename D::Action> &&
    std::equality_comparable<typename D::Key>;

template <SearchDomain D>
using StateOf = typename D::State;
template <SearchDomain D>
using ActionOf = typename D::Action;
template <SearchDomain D>
using KeyOf = typename D::Key;
template <SearchDomain D>
using SuccessorOf = Successor<typename D::State, typename D::Action>;

class NonPositiveEdgeCost : public std::logic_error {
 public:
  explicit NonPositiveEdgeCost(Cost c)
      : std::logic_error("edge cost must be positive, got " + std::to_string(c)) {}
};

// Clears `out` and fills it with the successors of `s`, rejecting
// zero or negative edge costs.
template <SearchDomain D>
void generate(const D& dom, const StateOf<D>& s, std::vector<SuccessorOf<D>>& out) {
  out.clear();
  dom.successors(s, out);
  for (const auto& c : out)
    if (!(c.cost > 0)) throw NonPositiveEdgeCost(c.cost);
}

}  // namespace rectsearch
