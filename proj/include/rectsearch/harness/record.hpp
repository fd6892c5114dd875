#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rectsearch/harness/metrics.hpp"
#include "rectsearch/trace.hpp"

namespace rectsearch {

inline constexpr std::string_view kTraceSchema = "rectsearch-trace";
inline constexpr int kTraceSchemaVersion = 1;

// One (algorithm, instance) run as persisted in a JSON-lines file.
struct TraceRecord {
  std::string key;
  nlohmann::json config;  // echo of the run configuration
  std::string algorithm;
  std::string instance;
  AnytimeTrace trace;
  Cost plan_cost = kInfiniteCost;
  std::size_t plan_length = 0;
};

inline nlohmann::json to_json(const TraceRecord& r) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : r.trace.events)
    events.push_back({e.elapsed_ms, e.expansions, e.generated, e.cost});
  nlohmann::json j;
  j["key"] = r.key;
  j["algorithm"] = r.algorithm;
  j["instance"] = r.instance;
  j["config"] = r.config;
  j["events"] = std::move(events);
  j["status"] = std::string(to_string(r.trace.status));
  j["totals"] = {{"expansions", r.trace.total_expansions},
                 {"generated", r.trace.total_generated},
                 {"elapsed_ms", r.trace.elapsed_ms}};
  j["plan_cost"] = r.plan_cost < kInfiniteCost ? nlohmann::json(r.plan_cost) : nlohmann::json();
  j["plan_length"] = r.plan_length;
  return j;
}

inline TraceRecord record_from_json(const nlohmann::json& j) {
  TraceRecord r;
  r.key = j.at("key").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.instance = j.at("instance").get<std::string>();
  r.config = j.at("config");
  for (const auto& e : j.at("events")) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("malformed trace event");
    r.trace.events.push_back(
        {e[0].get<double>(), e[1].get<std::uint64_t>(), e[2].get<std::uint64_t>(), e[3].get<double>()});
  }
  r.trace.status = parse_terminal_status(j.at("status").get<std::string>());
  const auto& t = j.at("totals");
  r.trace.total_expansions = t.at("expansions").get<std::uint64_t>();
  r.trace.total_generated = t.at("generated").get<std::uint64_t>();
  r.trace.elapsed_ms = t.at("elapsed_ms").get<double>();
  r.plan_cost = j.at("plan_cost").is_null() ? kInfiniteCost : j.at("plan_cost").get<double>();
  r.plan_length = j.at("plan_length").get<std::size_t>();
  return r;
}

// The record with wall-clock fields removed; what reruns must reproduce.
inline nlohmann::json timing_free(const TraceRecord& r) {
  nlohmann::json j = to_json(r);
  for (auto& e : j["events"]) e.erase(0);
  j["totals"].erase("elapsed_ms");
  return j;
}

inline void write_trace_header(std::ostream& out) {
  out << nlohmann::json{{"schema", kTraceSchema}, {"version", kTraceSchemaVersion}}.dump() << '\n';
}

inline void write_trace_record(std::ostream& out, const TraceRecord& r) {
  out << to_json(r).dump() << '\n';
}

// Reads a JSON-lines trace file. The first line must be the schema header.
inline std::vector<TraceRecord> read_trace_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty trace file");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("trace file header is not JSON");
  }
  if (!header.is_object() || header.value("schema", "") != kTraceSchema)
    throw std::invalid_argument("not a trace file");
  if (header.value("version", 0) != kTraceSchemaVersion)
    throw std::invalid_argument("unsupported trace schema version");
  std::vector<TraceRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed trace record: ") + e.what());
    }
  }
  return out;
}

inline RunTrace to_run_trace(const TraceRecord& r) { return {r.algorithm, r.instance, r.trace}; }

}  // namespace rectsearch
