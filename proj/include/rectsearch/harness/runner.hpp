#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rectsearch/aees.hpp"
#include "rectsearch/beam.hpp"
#include "rectsearch/best_first.hpp"
#include "rectsearch/depth_first.hpp"
#include "rectsearch/domains/generate.hpp"
#include "rectsearch/domains/io.hpp"
#include "rectsearch/harness/record.hpp"
#include "rectsearch/harness/run_config.hpp"
#include "rectsearch/monobead.hpp"
#include "rectsearch/rectangle.hpp"
#include "rectsearch/strict_rectangle.hpp"

namespace rectsearch {

using InstanceData =
    std::variant<TilesInstance, PancakeInstance, BlocksInstance, VacuumInstance, GridInstance>;

struct NamedInstance {
  std::string name;
  InstanceData data;
};

using AnyDomain = std::variant<TilesDomain, PancakeDomain, BlocksDomain, VacuumDomain, GridDomain>;

// Builds the search domain for `domain`/`cost`. Throws ParseError when the
// instance does not fit the domain (for example an unsolvable board).
inline AnyDomain make_domain(const std::string& domain, const std::string& cost,
                             const InstanceData& data) {
  try {
    if (domain == "tiles") return TilesDomain(std::get<TilesInstance>(data), parse_tile_cost(cost));
    if (domain == "pancake")
      return PancakeDomain(std::get<PancakeInstance>(data), parse_pancake_cost(cost));
    if (domain == "blocks")
      return BlocksDomain(std::get<BlocksInstance>(data), parse_blocks_variant(cost));
    if (domain == "vacuum")
      return VacuumDomain(std::get<VacuumInstance>(data), parse_vacuum_cost(cost));
    if (domain == "grid") {
      const auto& g = std::get<GridInstance>(data);
      return GridDomain(g.map, g.scenario, parse_grid_cost(cost));
    }
  } catch (const std::bad_variant_access&) {
    throw ParseError("instance does not belong to domain " + domain);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ConfigError("unknown domain: " + domain);
}

// ---- generation -------------------------------------------------------

// Generator parameters: kind plus key=value settings. Unknown keys are an
// error; missing keys take the defaults below.
struct GenSpec {
  std::string kind;
  std::size_t count = 10;
  std::uint64_t seed = 1;
  std::map<std::string, std::string> params;
};

// Parses "key=value,key=value". `kind` may also be given as a key.
inline GenSpec parse_gen_spec(const std::string& text, const std::string& kind, std::uint64_t seed) {
  GenSpec g;
  g.kind = kind;
  g.seed = seed;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("bad generator setting '" + item + "'");
    const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    if (k == "kind") g.kind = v;
    else if (k == "count") g.count = detail::parse_positive(k, v);
    else if (k == "seed") {
      try {
        std::size_t used = 0;
        g.seed = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ConfigError("seed must be an integer, got '" + v + "'");
      }
    } else g.params[k] = v;
    pos = comma + 1;
  }
  return g;
}

inline std::vector<NamedInstance> generate_instances(const GenSpec& spec) {
  static const std::map<std::string, std::map<std::string, double>> defaults{
      {"tiles", {{"width", 3}, {"height", 3}}},
      {"pancake", {{"n", 7}}},
      {"blocks", {{"n", 5}}},
      {"vacuum", {{"width", 8}, {"height", 8}, {"dirt", 3}, {"density", 0.2}}},
      {"grid", {{"width", 20}, {"height", 20}, {"density", 0.35}}},
  };
  auto d = defaults.find(spec.kind);
  if (d == defaults.end()) throw ConfigError("unknown instance kind: " + spec.kind);
  std::map<std::string, double> p = d->second;
  for (const auto& [k, v] : spec.params) {
    if (!p.contains(k)) throw ConfigError("generator " + spec.kind + " takes no setting '" + k + "'");
    p[k] = detail::parse_number(k, v);
  }
  auto integer = [&](const char* k, int lo, int hi) {
    const double v = p.at(k);
    if (v != static_cast<int>(v) || v < lo || v > hi)
      throw ConfigError(std::string(k) + " must be an integer in [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    return static_cast<int>(v);
  };
  auto fraction = [&](const char* k) {
    const double v = p.at(k);
    if (!(v >= 0 && v < 1)) throw ConfigError(std::string(k) + " must be in [0, 1)");
    return v;
  };
  Rng rng(spec.seed);
  std::vector<NamedInstance> out;
  for (std::size_t i = 0; i < spec.count; ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "%s-%04zu", spec.kind.c_str(), i);
    InstanceData data;
    if (spec.kind == "tiles") {
      const int w = integer("width", 2, 8), h = integer("height", 2, 8);
      if (w * h > 25) throw ConfigError("tiles boards are limited to 25 cells");
      data = random_tiles(w, h, rng);
    } else if (spec.kind == "pancake") {
      data = random_pancake(integer("n", 2, 255), rng);
    } else if (spec.kind == "blocks") {
      data = random_blocks(integer("n", 1, 250), rng);
    } else if (spec.kind == "vacuum") {
      const int w = integer("width", 1, 4096), h = integer("height", 1, 4096);
      const int dirt = integer("dirt", 1, 64);
      if (dirt >= w * h) throw ConfigError("more dirt than free cells");
      try {
        data = random_vacuum(w, h, dirt, fraction("density"), rng);
      } catch (const std::runtime_error& e) {
        throw ConfigError(e.what());
      }
    } else {
      const int w = integer("width", 1, 8192), h = integer("height", 1, 8192);
      if (w * static_cast<std::int64_t>(h) < 2) throw ConfigError("grid needs at least two cells");
      try {
        data = random_grid(w, h, fraction("density"), rng);
      } catch (const std::runtime_error& e) {
        throw ConfigError(e.what());
      }
    }
    out.push_back({name, std::move(data)});
  }
  return out;
}

// ---- files ------------------------------------------------------------

// Writes `inst` into `dir` as <name>.txt, or <name>.map plus <name>.scen
// for grids. Returns the paths written.
inline std::vector<std::filesystem::path> write_instance(const std::filesystem::path& dir,
                                                         const NamedInstance& inst) {
  std::vector<std::filesystem::path> paths;
  auto open = [&](const std::string& ext) {
    paths.push_back(dir / (inst.name + ext));
    std::ofstream out(paths.back());
    if (!out) throw std::runtime_error("cannot write " + paths.back().string());
    return out;
  };
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, GridInstance>) {
          auto m = open(".map");
          write_movingai_map(m, d.map);
          auto s = open(".scen");
          write_scenario(s, d.scenario);
        } else {
          auto out = open(".txt");
          if constexpr (std::is_same_v<T, TilesInstance>) write_tiles(out, d);
          if constexpr (std::is_same_v<T, PancakeInstance>) write_pancake(out, d);
          if constexpr (std::is_same_v<T, BlocksInstance>) write_blocks(out, d);
          if constexpr (std::is_same_v<T, VacuumInstance>) write_vacuum(out, d);
        }
      },
      inst.data);
  return paths;
}

// Reads one instance file. For grids `path` is the .map file and the
// scenario is the .scen file with the same stem.
inline NamedInstance read_instance(const std::string& domain, const std::filesystem::path& path) {
  NamedInstance n;
  n.name = path.stem().string();
  if (domain == "tiles") n.data = parse_file(path, parse_tiles);
  else if (domain == "pancake") n.data = parse_file(path, parse_pancake);
  else if (domain == "blocks") n.data = parse_file(path, parse_blocks);
  else if (domain == "vacuum") n.data = parse_file(path, parse_vacuum);
  else if (domain == "grid") {
    auto scen = path;
    scen.replace_extension(".scen");
    n.data = GridInstance{parse_file(path, parse_movingai_map), parse_file(scen, parse_scenario)};
  } else {
    throw ConfigError("unknown domain: " + domain);
  }
  return n;
}

// Resolves --instances: a file, a directory (every .txt file, or every
// .map file for grids, by name), or "gen:..." for in-memory generation.
inline std::vector<NamedInstance> load_instances(const std::string& domain, const std::string& spec,
                                                 std::uint64_t seed) {
  if (spec.rfind("gen:", 0) == 0) {
    const auto g = parse_gen_spec(spec.substr(4), domain, seed);
    if (g.kind != domain) throw ConfigError("generator kind " + g.kind + " does not match domain " + domain);
    return generate_instances(g);
  }
  const std::filesystem::path p(spec);
  if (!std::filesystem::exists(p)) throw ParseError("no such instance path: " + spec);
  if (!std::filesystem::is_directory(p)) return {read_instance(domain, p)};
  const std::string ext = domain == "grid" ? ".map" : ".txt";
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(p))
    if (e.is_regular_file() && e.path().extension() == ext) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ParseError("no " + ext + " instance files in " + spec);
  std::vector<NamedInstance> out;
  for (const auto& f : files) out.push_back(read_instance(domain, f));
  return out;
}

// ---- running ----------------------------------------------------------

struct RunOutcome {
  AnytimeTrace trace;
  Cost plan_cost = kInfiniteCost;
  std::size_t plan_length = 0;
};

template <SearchDomain D>
RunOutcome run_algorithm(const AlgorithmSpec& a, const D& dom, const Limits& limits) {
  auto pack = [](auto r) { return RunOutcome{r.trace, r.plan_cost, r.plan.size()}; };
  const std::string& id = a.id;
  if (id == "rectangle" || id == "strict-rectangle") {
    RectangleConfig cfg;
    cfg.aspect = a.aspect;
    cfg.ordering = a.ordering;
    cfg.limits = limits;
    return id == "rectangle" ? pack(rectangle_search(dom, cfg)) : pack(strict_rectangle_search(dom, cfg));
  }
  if (id == "beam") return pack(beam_search(dom, BeamConfig{a.width, a.ordering, limits}));
  if (id == "bead") return pack(bead_search(dom, a.width, limits));
  if (id == "monobead") return pack(monobead_search(dom, MonobeadConfig{a.width, a.ordering, limits}));
  if (id == "cabs") {
    CabsConfig cfg;
    cfg.ordering = a.ordering;
    cfg.limits = limits;
    return pack(cabs_search(dom, cfg));
  }
  if (id == "astar") return pack(wastar_search(dom, 1, limits));
  if (id == "wastar") return pack(wastar_search(dom, a.weight, limits));
  if (id == "gbfs") return pack(gbfs_search(dom, limits));
  if (id == "awastar") return pack(awastar_search(dom, a.weight, limits));
  if (id == "arastar") return pack(arastar_search(dom, a.schedule, limits));
  if (id == "aees") return pack(aees_search(dom, limits));
  if (id == "dfs") return pack(dfs_star_search(dom, DfsStarConfig{a.order_children, limits}));
  if (id == "ilds") return pack(ilds_star_search(dom, IldsConfig{limits}));
  throw ConfigError("unknown algorithm: " + id);
}

inline RunOutcome run_algorithm(const AlgorithmSpec& a, const AnyDomain& dom, const Limits& limits) {
  return std::visit([&](const auto& d) { return run_algorithm(a, d, limits); }, dom);
}

// Display name of an algorithm configuration, e.g. "rectangle(aspect=2)".
inline std::string algorithm_label(const std::string& id,
                                   const std::map<std::string, std::string>& params) {
  std::string s = id;
  if (params.empty()) return s;
  s += '(';
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) s += ';';
    s += k + '=' + v;
    first = false;
  }
  return s + ')';
}

// Runs the configured algorithm on every instance, one record each.
inline std::vector<TraceRecord> run_experiment(const RunConfig& cfg,
                                               const std::vector<NamedInstance>& instances) {
  const AlgorithmSpec a = validate(cfg);
  const std::string label = algorithm_label(cfg.algorithm, cfg.params);
  std::vector<TraceRecord> out;
  for (const auto& inst : instances) {
    const AnyDomain dom = make_domain(cfg.domain, cfg.cost, inst.data);
    const RunOutcome r = run_algorithm(a, dom, cfg.limits());
    TraceRecord rec;
    rec.key = label + '|' + cfg.domain + '|' + cfg.cost + '|' + inst.name;
    rec.config = to_json(cfg);
    rec.algorithm = label;
    rec.instance = inst.name;
    rec.trace = r.trace;
    rec.plan_cost = r.plan_cost;
    rec.plan_length = r.plan_length;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace rectsearch
