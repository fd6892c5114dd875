#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectsearch/trace.hpp"

namespace rectsearch {

// best_known / incumbent: 0 while unsolved, 1 for a best-known solution.
inline double quality(Cost best_known, Cost incumbent) {
  if (best_known < 0 || std::isnan(best_known) || std::isnan(incumbent))
    throw std::invalid_argument("quality: best-known cost must be a non-negative number");
  if (incumbent == kInfiniteCost) return 0;
  if (cost_less(incumbent, best_known))
    throw std::logic_error("quality: incumbent " + std::to_string(incumbent) +
                           " is below the best-known cost " + std::to_string(best_known));
  if (cost_equal(incumbent, best_known)) return 1;
  return best_known / incumbent;
}

enum class CurveAxis { ms, expansions };

inline std::string_view to_string(CurveAxis a) { return a == CurveAxis::ms ? "ms" : "expansions"; }

// One algorithm's run on one instance.
struct RunTrace {
  std::string algorithm;
  std::string instance;
  AnytimeTrace trace;
};

inline Cost cost_at(const AnytimeTrace& t, CurveAxis axis, double x) {
  if (axis == CurveAxis::ms) return t.cost_at_ms(x);
  if (x < 0) return kInfiniteCost;
  const double cap = static_cast<double>(std::numeric_limits<std::uint64_t>::max());
  return t.cost_at_expansions(x >= cap ? std::numeric_limits<std::uint64_t>::max()
                                       : static_cast<std::uint64_t>(x));
}

struct AlgorithmCurve {
  std::string algorithm;
  std::vector<double> quality;       // mean over all instances
  std::vector<std::size_t> coverage;  // instances solved
  // Mean cost over the instances every non-omitted algorithm has solved
  // at that point; NaN when that set is empty or the algorithm is omitted.
  std::vector<double> mean_cost;
  std::optional<double> full_coverage_at;  // when the last instance got its first solution
  bool omitted_from_cost = false;          // final coverage below 20%
};

struct QualityCurves {
  CurveAxis axis = CurveAxis::ms;
  std::vector<double> grid;
  std::size_t instances = 0;
  std::vector<std::size_t> mutually_solved;
  std::vector<AlgorithmCurve> curves;  // sorted by algorithm name
};

// Best-known cost per instance: the minimum over every run's final cost
// and any externally supplied value (such as an oracle result).
inline std::map<std::string, Cost> best_known_costs(const std::vector<RunTrace>& runs,
                                                    const std::map<std::string, Cost>& extra = {}) {
  std::map<std::string, Cost> best = extra;
  for (const auto& r : runs) {
    auto [it, fresh] = best.try_emplace(r.instance, r.trace.final_cost());
    if (!fresh) it->second = std::min(it->second, r.trace.final_cost());
  }
  return best;
}

inline QualityCurves build_quality_curves(const std::vector<RunTrace>& runs,
                                          const std::map<std::string, Cost>& best_known,
                                          const std::vector<double>& grid,
                                          CurveAxis axis = CurveAxis::ms) {
  std::map<std::string, std::map<std::string, const AnytimeTrace*>> by_alg;
  std::set<std::string> instances;
  for (const auto& r : runs) {
    if (!by_alg[r.algorithm].emplace(r.instance, &r.trace).second)
      throw std::invalid_argument("duplicate run of " + r.algorithm + " on " + r.instance);
    instances.insert(r.instance);
  }
  for (const auto& [alg, traces] : by_alg)
    if (traces.size() != instances.size())
      throw std::invalid_argument("algorithm " + alg + " was not run on every instance");
  for (const auto& inst : instances)
    if (!best_known.contains(inst)) throw std::invalid_argument("no best-known cost for " + inst);
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("curve grid must be non-decreasing");

  QualityCurves out;
  out.axis = axis;
  out.grid = grid;
  out.instances = instances.size();
  const std::size_t n = instances.size();
  const std::size_t g = grid.size();

  for (const auto& [alg, traces] : by_alg) {
    AlgorithmCurve c;
    c.algorithm = alg;
    c.quality.assign(g, 0.0);
    c.coverage.assign(g, 0);
    c.mean_cost.assign(g, std::numeric_limits<double>::quiet_NaN());
    double last_first = 0;
    std::size_t solved = 0;
    for (const auto& [inst, t] : traces) {
      const Cost best = best_known.at(inst);
      for (std::size_t i = 0; i < g; ++i) {
        const Cost cost = cost_at(*t, axis, grid[i]);
        c.quality[i] += quality(best, cost);
        if (cost < kInfiniteCost) ++c.coverage[i];
      }
      if (!t->events.empty()) {
        ++solved;
        const auto& first = t->events.front();
        last_first = std::max(last_first, axis == CurveAxis::ms ? first.elapsed_ms
                                                                : static_cast<double>(first.expansions));
      }
    }
    if (n > 0)
      for (auto& q : c.quality) q /= static_cast<double>(n);
    if (n > 0 && solved == n) c.full_coverage_at = last_first;
    c.omitted_from_cost = 5 * solved < n;
    out.curves.push_back(std::move(c));
  }

  out.mutually_solved.assign(g, 0);
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<std::string> mutual;
    for (const auto& inst : instances) {
      bool all = true;
      for (std::size_t a = 0; a < out.curves.size() && all; ++a) {
        if (out.curves[a].omitted_from_cost) continue;
        all = cost_at(*by_alg.at(out.curves[a].algorithm).at(inst), axis, grid[i]) < kInfiniteCost;
      }
      if (all) mutual.push_back(inst);
    }
    out.mutually_solved[i] = mutual.size();
    if (mutual.empty()) continue;
    for (auto& c : out.curves) {
      if (c.omitted_from_cost) continue;
      double sum = 0;
      for (const auto& inst : mutual) sum += cost_at(*by_alg.at(c.algorithm).at(inst), axis, grid[i]);
      c.mean_cost[i] = sum / static_cast<double>(mutual.size());
    }
  }
  return out;
}

inline constexpr std::string_view kCurvesCsvHeader = "# rectsearch-curves version 1";

// Long format, one row per (grid point, algorithm). Empty mean_cost
// cells mark points with no mutually solved instance.
inline void write_curves_csv(std::ostream& out, const QualityCurves& q) {
  out << kCurvesCsvHeader << '\n';
  out << "axis,x,algorithm,quality,coverage,instances,mean_cost,mutually_solved,"
         "full_coverage_at,omitted_from_cost\n";
  out.precision(17);
  for (std::size_t i = 0; i < q.grid.size(); ++i) {
    for (const auto& c : q.curves) {
      out << to_string(q.axis) << ',' << q.grid[i] << ',' << c.algorithm << ',' << c.quality[i]
          << ',' << c.coverage[i] << ',' << q.instances << ',';
      if (!std::isnan(c.mean_cost[i])) out << c.mean_cost[i];
      out << ',' << q.mutually_solved[i] << ',';
      if (c.full_coverage_at) out << *c.full_coverage_at;
      out << ',' << (c.omitted_from_cost ? 1 : 0) << '\n';
    }
  }
}

// Parses "a:b:step" into a grid a, a+step, ..., up to b inclusive.
inline std::vector<double> parse_grid(const std::string& spec) {
  const auto p1 = spec.find(':');
  const auto p2 = p1 == std::string::npos ? std::string::npos : spec.find(':', p1 + 1);
  if (p2 == std::string::npos) throw std::invalid_argument("grid must look like a:b:step");
  double a = 0, b = 0, step = 0;
  try {
    std::size_t used = 0;
    a = std::stod(spec.substr(0, p1), &used);
    if (used != p1) throw std::invalid_argument("");
    const std::string bs = spec.substr(p1 + 1, p2 - p1 - 1);
    b = std::stod(bs, &used);
    if (used != bs.size()) throw std::invalid_argument("");
    const std::string ss = spec.substr(p2 + 1);
    step = std::stod(ss, &used);
    if (used != ss.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must look like a:b:step, got " + spec);
  }
  if (!(step > 0) || b < a) throw std::invalid_argument("grid needs step > 0 and b >= a");
  std::vector<double> grid;
  for (std::uint64_t i = 0;; ++i) {
    const double x = a + step * static_cast<double>(i);
    if (x > b + step * 1e-9) break;
    grid.push_back(x);
  }
  return grid;
}

}  // namespace rectsearch
