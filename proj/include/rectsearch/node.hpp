#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "rectsearch/domain.hpp"

namespace rectsearch {

// Index into a NodePool. Doubles as the insertion counter used for
// deterministic tie-breaking.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

template <class State, class Action>
struct Node {
  State state{};
  Cost g = 0;
  Cost h = 0;
  float d = 0;
  std::uint32_t depth = 0;
  NodeId parent = kNoNode;
  Action action{};

  Cost f() const noexcept { return g + h; }
};

template <SearchDomain D>
using NodeOf = Node<StateOf<D>, ActionOf<D>>;

// Append-only node storage. Chunks never move, so references stay valid
// while new nodes are added.
template <class N>
class NodePool {
 public:
  static constexpr std::size_t kChunkBits = 16;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;

  NodeId add(const N& n) {
    if (size_ == chunks_.size() * kChunkSize)
      chunks_.push_back(std::make_unique<N[]>(kChunkSize));
    (*this)[static_cast<NodeId>(size_)] = n;
    return static_cast<NodeId>(size_++);
  }

  N& operator[](NodeId id) { return chunks_[id >> kChunkBits][id & (kChunkSize - 1)]; }
  const N& operator[](NodeId id) const {
    return chunks_[id >> kChunkBits][id & (kChunkSize - 1)];
  }

  std::size_t size() const noexcept { return size_; }

 private:
  std::vector<std::unique_ptr<N[]>> chunks_;
  std::size_t size_ = 0;
};

template <SearchDomain D>
NodeOf<D> make_root(const D& dom) {
  NodeOf<D> root;
  root.state = dom.initial_state();
  root.g = 0;
  root.h = dom.h(root.state);
  root.d = static_cast<float>(dom.d(root.state));
  return root;
}

// Children of `n`, with `parent` as their back link.
template <SearchDomain D>
std::vector<NodeOf<D>> expand(const D& dom, const NodeOf<D>& n, NodeId parent = kNoNode) {
  std::vector<SuccessorOf<D>> succ;
  generate(dom, n.state, succ);
  std::vector<NodeOf<D>> out;
  out.reserve(succ.size());
  for (auto& s : succ) {
    NodeOf<D> c;
    c.state = std::move(s.state);
    c.g = n.g + s.cost;
    c.h = s.h;
    c.d = static_cast<float>(s.d);
    c.depth = n.depth + 1;
    c.parent = parent;
    c.action = s.action;
    out.push_back(std::move(c));
  }
  return out;
}

template <class Action>
struct Path {
  std::vector<Action> actions;
  Cost cost = 0;
};

// Actions from the root to `id`; the cost is the node's g.
template <class N>
auto reconstruct_path(const NodePool<N>& pool, NodeId id) {
  Path<decltype(N{}.action)> p;
  p.cost = pool[id].g;
  for (NodeId cur = id; pool[cur].parent != kNoNode; cur = pool[cur].parent)
    p.actions.push_back(pool[cur].action);
  std::reverse(p.actions.begin(), p.actions.end());
  return p;
}

template <class State>
struct Replay {
  State state;
  Cost cost = 0;
};

// Applies `actions` from the initial state through the transition
// function. Empty result if some action is not applicable.
template <SearchDomain D>
std::optional<Replay<StateOf<D>>> replay(const D& dom, const std::vector<ActionOf<D>>& actions) {
  Replay<StateOf<D>> r{dom.initial_state(), 0};
  std::vector<SuccessorOf<D>> succ;
  for (const auto& a : actions) {
    generate(dom, r.state, succ);
    bool found = false;
    for (auto& s : succ) {
      if (s.action == a) {
        r.state = std::move(s.state);
        r.cost += s.cost;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return r;
}

}  // namespace rectsearch
