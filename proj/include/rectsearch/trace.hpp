#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectsearch/cost.hpp"
#include "rectsearch/node.hpp"

namespace rectsearch {

enum class TerminalStatus {
  exhausted_optimal,
  first_solution,
  time_limit,
  memory_limit,
  expansion_limit,
  iteration_limit,
};

inline std::string_view to_string(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::exhausted_optimal: return "exhausted-optimal";
    case TerminalStatus::first_solution: return "first-solution";
    case TerminalStatus::time_limit: return "time-limit";
    case TerminalStatus::memory_limit: return "memory-limit";
    case TerminalStatus::expansion_limit: return "expansion-limit";
    case TerminalStatus::iteration_limit: return "iteration-limit";
  }
  return "?";
}

inline TerminalStatus parse_terminal_status(std::string_view s) {
  for (auto t : {TerminalStatus::exhausted_optimal, TerminalStatus::first_solution,
                 TerminalStatus::time_limit, TerminalStatus::memory_limit,
                 TerminalStatus::expansion_limit, TerminalStatus::iteration_limit})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown terminal status: " + std::string(s));
}

struct TraceEvent {
  double elapsed_ms = 0;
  std::uint64_t expansions = 0;
  std::uint64_t generated = 0;
  Cost cost = kInfiniteCost;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

// Every improvement of the incumbent, in order. Costs strictly decrease.
struct AnytimeTrace {
  std::vector<TraceEvent> events;
  TerminalStatus status = TerminalStatus::exhausted_optimal;
  std::uint64_t total_expansions = 0;
  std::uint64_t total_generated = 0;
  double elapsed_ms = 0;

  Cost final_cost() const { return events.empty() ? kInfiniteCost : events.back().cost; }

  // Incumbent cost after `expansions` expansions (infinite before the first event).
  Cost cost_at_expansions(std::uint64_t expansions) const {
    Cost c = kInfiniteCost;
    for (const auto& e : events) {
      if (e.expansions > expansions) break;
      c = e.cost;
    }
    return c;
  }
  Cost cost_at_ms(double ms) const {
    Cost c = kInfiniteCost;
    for (const auto& e : events) {
      if (e.elapsed_ms > ms) break;
      c = e.cost;
    }
    return c;
  }
};

struct Incumbent {
  Cost cost = kInfiniteCost;
  NodeId goal = kNoNode;
  double found_at_ms = 0;
  std::uint64_t found_after_expansions = 0;

  bool exists() const noexcept { return cost < kInfiniteCost; }
};

struct Limits {
  std::optional<std::uint64_t> expansions;
  std::optional<double> time_ms;
  std::optional<std::uint64_t> memory_bytes;
};

// Counts work, enforces limits and records trace events for one run.
// The clock is read every 64 expansions and at each event.
class RunMonitor {
 public:
  explicit RunMonitor(Limits limits = {}, std::size_t bytes_per_node = 0)
      : limits_(limits), bytes_per_node_(bytes_per_node), start_(Clock::now()) {}

  // Call before each expansion. Returns false (and the expansion must not
  // happen) once a limit has been reached.
  bool begin_expansion() {
    if (stopped_) return false;
    if (limits_.expansions && expansions_ >= *limits_.expansions) {
      stop(TerminalStatus::expansion_limit);
      return false;
    }
    if (limits_.time_ms && (expansions_ & 63) == 0 && elapsed_ms() >= *limits_.time_ms) {
      stop(TerminalStatus::time_limit);
      return false;
    }
    ++expansions_;
    return true;
  }

  void add_generated(std::uint64_t n = 1) noexcept { generated_ += n; }

  void add_nodes(std::uint64_t n = 1) {
    nodes_ += n;
    if (limits_.memory_bytes && nodes_ * bytes_per_node_ > *limits_.memory_bytes)
      stop(TerminalStatus::memory_limit);
  }
  void remove_nodes(std::uint64_t n = 1) noexcept { nodes_ -= n; }

  void report_incumbent(Cost cost) {
    if (!trace_.events.empty() && !cost_less(cost, trace_.events.back().cost))
      throw std::logic_error("trace events must strictly decrease in cost");
    trace_.events.push_back({elapsed_ms(), expansions_, generated_, cost});
  }

  void stop(TerminalStatus s) {
    if (!stopped_) {
      stopped_ = true;
      status_ = s;
    }
  }
  bool stopped() const noexcept { return stopped_; }

  std::uint64_t expansions() const noexcept { return expansions_; }
  std::uint64_t generated() const noexcept { return generated_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const AnytimeTrace& trace() const noexcept { return trace_; }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

  // Final trace. `natural` is the status if no limit stopped the run.
  AnytimeTrace finish(TerminalStatus natural) {
    AnytimeTrace t = trace_;
    t.status = stopped_ ? status_ : natural;
    t.total_expansions = expansions_;
    t.total_generated = generated_;
    t.elapsed_ms = elapsed_ms();
    return t;
  }

 private:
  using Clock = std::chrono::steady_clock;
  Limits limits_;
  std::size_t bytes_per_node_;
  Clock::time_point start_;
  std::uint64_t expansions_ = 0;
  std::uint64_t generated_ = 0;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  TerminalStatus status_ = TerminalStatus::exhausted_optimal;
  AnytimeTrace trace_;
};

}  // namespace rectsearch
