#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rectsearch/best_first.hpp"
#include "rectsearch/domains/blocks.hpp"
#include "rectsearch/domains/grid.hpp"
#include "rectsearch/domains/pancake.hpp"
#include "rectsearch/domains/tiles.hpp"
#include "rectsearch/domains/vacuum.hpp"
#include "rectsearch/ordering.hpp"

namespace rectsearch {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids{
      "rectangle", "strict-rectangle", "beam", "bead",   "monobead", "cabs", "astar",
      "wastar",    "gbfs",             "awastar", "arastar", "aees",  "dfs",  "ilds"};
  return ids;
}

inline const std::vector<std::string>& domain_ids() {
  static const std::vector<std::string> ids{"tiles", "pancake", "blocks", "vacuum", "grid"};
  return ids;
}

// Checks that `cost` names a cost model (or variant, for blocks) of `domain`.
inline void check_cost_model(const std::string& domain, const std::string& cost) {
  try {
    if (domain == "tiles") parse_tile_cost(cost);
    else if (domain == "pancake") parse_pancake_cost(cost);
    else if (domain == "blocks") parse_blocks_variant(cost);
    else if (domain == "vacuum") parse_vacuum_cost(cost);
    else if (domain == "grid") parse_grid_cost(cost);
    else throw ConfigError("unknown domain: " + domain);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

// Algorithm id with its parameters resolved to typed values.
struct AlgorithmSpec {
  std::string id;
  std::uint32_t aspect = 1;
  std::uint32_t width = 1;
  Ordering ordering{OrderKey::d};
  double weight = 1;
  WeightSchedule schedule = WeightSchedule::list({5, 3, 2, 1.5, 1});
  bool order_children = true;

  // Parameters accepted per algorithm, with their textual values.
  std::map<std::string, std::string> params;
};

namespace detail {

inline std::uint32_t parse_positive(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty() || v[0] == '-' || x == 0 || x > 0xffffffffULL)
    throw ConfigError(key + " must be a positive integer, got '" + v + "'");
  return static_cast<std::uint32_t>(x);
}

inline double parse_number(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError(key + " must be a number, got '" + v + "'");
  return x;
}

// "5,3,2,1.5,1" is an explicit list; "10-0.02" is initial weight 10 with
// decrement 0.02.
inline WeightSchedule parse_schedule(const std::string& v) {
  try {
    if (v.find(',') == std::string::npos && v.find('-', 1) != std::string::npos) {
      const auto dash = v.find('-', 1);
      return WeightSchedule::decrement(parse_number("schedule", v.substr(0, dash)),
                                       parse_number("schedule", v.substr(dash + 1)));
    }
    std::vector<double> ws;
    std::size_t pos = 0;
    while (pos <= v.size()) {
      const auto comma = v.find(',', pos);
      ws.push_back(parse_number("schedule", v.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return WeightSchedule::list(ws);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bad weight schedule '") + v + "': " + e.what());
  }
}

}  // namespace detail

inline AlgorithmSpec parse_algorithm(const std::string& id,
                                     const std::map<std::string, std::string>& params) {
  static const std::map<std::string, std::vector<std::string>> allowed{
      {"rectangle", {"aspect", "order"}},
      {"strict-rectangle", {"aspect", "order"}},
      {"beam", {"width", "order"}},
      {"bead", {"width"}},
      {"monobead", {"width", "order"}},
      {"cabs", {"order"}},
      {"astar", {}},
      {"wastar", {"weight"}},
      {"gbfs", {}},
      {"awastar", {"weight"}},
      {"arastar", {"schedule"}},
      {"aees", {}},
      {"dfs", {"order_children"}},
      {"ilds", {}},
  };
  auto it = allowed.find(id);
  if (it == allowed.end()) throw ConfigError("unknown algorithm: " + id);
  AlgorithmSpec a;
  a.id = id;
  a.params = params;
  for (const auto& [k, v] : params) {
    if (std::find(it->second.begin(), it->second.end(), k) == it->second.end())
      throw ConfigError("algorithm " + id + " takes no parameter '" + k + "'");
    if (k == "aspect") a.aspect = detail::parse_positive(k, v);
    else if (k == "width") a.width = detail::parse_positive(k, v);
    else if (k == "order") {
      try {
        a.ordering.primary = parse_order_key(v);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else if (k == "weight") {
      a.weight = detail::parse_number(k, v);
      if (!(a.weight >= 1)) throw ConfigError("weight must be >= 1");
    } else if (k == "schedule") a.schedule = detail::parse_schedule(v);
    else if (k == "order_children") {
      if (v != "true" && v != "false") throw ConfigError("order_children must be true or false");
      a.order_children = v == "true";
    }
  }
  return a;
}

struct RunConfig {
  std::string algorithm;
  std::map<std::string, std::string> params;
  std::string domain;
  std::string cost;
  std::string instances;  // path or "gen:key=value,..."
  std::optional<double> time_limit_ms;
  std::optional<std::uint64_t> expansion_limit;
  std::optional<std::uint64_t> memory_limit_bytes;
  std::uint64_t seed = 1;

  Limits limits() const { return {expansion_limit, time_limit_ms, memory_limit_bytes}; }
};

// Throws ConfigError on any inconsistency; returns the resolved algorithm.
inline AlgorithmSpec validate(const RunConfig& c) {
  if (!c.time_limit_ms && !c.expansion_limit)
    throw ConfigError("a time limit or an expansion limit is required");
  if (c.time_limit_ms && !(*c.time_limit_ms > 0)) throw ConfigError("time limit must be positive");
  if (c.expansion_limit && *c.expansion_limit == 0)
    throw ConfigError("expansion limit must be positive");
  if (c.memory_limit_bytes && *c.memory_limit_bytes == 0)
    throw ConfigError("memory limit must be positive");
  check_cost_model(c.domain, c.cost);
  if (c.instances.empty()) throw ConfigError("no instances given");
  return parse_algorithm(c.algorithm, c.params);
}

inline nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["algorithm"] = c.algorithm;
  j["params"] = c.params;
  j["domain"] = c.domain;
  j["cost"] = c.cost;
  j["instances"] = c.instances;
  j["time_limit_ms"] = c.time_limit_ms ? nlohmann::json(*c.time_limit_ms) : nlohmann::json();
  j["expansion_limit"] = c.expansion_limit ? nlohmann::json(*c.expansion_limit) : nlohmann::json();
  j["memory_limit_bytes"] =
      c.memory_limit_bytes ? nlohmann::json(*c.memory_limit_bytes) : nlohmann::json();
  j["seed"] = c.seed;
  return j;
}

}  // namespace rectsearch
