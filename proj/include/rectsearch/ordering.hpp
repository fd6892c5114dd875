#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectsearch/node.hpp"

namespace rectsearch {

enum class OrderKey { d, f, h };

// Primary key, then f ascending, then insertion sequence ascending.
struct Ordering {
  OrderKey primary = OrderKey::d;
};

inline std::string_view to_string(OrderKey k) {
  switch (k) {
    case OrderKey::d: return "d";
    case OrderKey::f: return "f";
    case OrderKey::h: return "h";
  }
  return "?";
}

inline OrderKey parse_order_key(std::string_view s) {
  if (s == "d") return OrderKey::d;
  if (s == "f") return OrderKey::f;
  if (s == "h") return OrderKey::h;
  throw std::invalid_argument("unknown ordering key: " + std::string(s));
}

template <class N>
double primary_value(const N& n, Ordering ord) {
  switch (ord.primary) {
    case OrderKey::d: return n.d;
    case OrderKey::f: return n.f();
    case OrderKey::h: return n.h;
  }
  return 0;
}

// `less` means a comes first. A node compared with itself is `equal`.
template <class N>
std::strong_ordering compare(const N& a, NodeId seq_a, const N& b, NodeId seq_b,
                             Ordering ord) {
  const double pa = primary_value(a, ord), pb = primary_value(b, ord);
  if (pa < pb) return std::strong_ordering::less;
  if (pb < pa) return std::strong_ordering::greater;
  if (a.f() < b.f()) return std::strong_ordering::less;
  if (b.f() < a.f()) return std::strong_ordering::greater;
  return seq_a <=> seq_b;
}

// Heap entry carrying its own sort keys so that comparisons do not touch
// the node pool.
struct QueueEntry {
  double primary;
  double tie;
  NodeId id;
};

struct EntryAfter {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const noexcept {
    if (a.primary != b.primary) return a.primary > b.primary;
    if (a.tie != b.tie) return a.tie > b.tie;
    return a.id > b.id;
  }
};

template <class N>
QueueEntry make_entry(const N& n, NodeId id, Ordering ord) {
  return {primary_value(n, ord), n.f(), id};
}

// Binary min-heap of QueueEntry.
class NodeQueue {
 public:
  void push(const QueueEntry& e) {
    heap_.push_back(e);
    std::push_heap(heap_.begin(), heap_.end(), EntryAfter{});
  }
  QueueEntry pop() {
    std::pop_heap(heap_.begin(), heap_.end(), EntryAfter{});
    QueueEntry e = heap_.back();
    heap_.pop_back();
    return e;
  }
  const QueueEntry& top() const { return heap_.front(); }
  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  void clear() noexcept { heap_.clear(); }

  // Raw access for bulk re-keying; call rebuild() afterwards.
  std::vector<QueueEntry>& entries() noexcept { return heap_; }
  void rebuild() { std::make_heap(heap_.begin(), heap_.end(), EntryAfter{}); }

 private:
  std::vector<QueueEntry> heap_;
};

}  // namespace rectsearch
