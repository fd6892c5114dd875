// rectsearch: run experiments, compute oracle costs, build quality curves
// and generate instances. Exit codes: 0 success, 1 runtime failure,
// 2 invalid configuration, 3 instance parse failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rectsearch/harness/metrics.hpp"
#include "rectsearch/harness/oracle.hpp"
#include "rectsearch/harness/record.hpp"
#include "rectsearch/harness/runner.hpp"

namespace fs = std::filesystem;
using namespace rectsearch;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitParse = 3;

std::map<std::string, std::string> parse_pairs(const std::vector<std::string>& items,
                                               const std::string& what) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError(what + " must look like key=value: " + item);
    if (!out.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
      throw ConfigError(what + " given twice: " + item.substr(0, eq));
  }
  return out;
}

// File-system friendly form of an algorithm label.
std::string file_stem(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') c = '_';
  return s;
}

std::string format_cost(Cost c) {
  if (c == kInfiniteCost) return "none";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", c);
  return buf;
}

struct RunArgs {
  RunConfig cfg;
  std::vector<std::string> alg_params;
  std::string out;
};

int do_run(RunArgs& a) {
  a.cfg.params = parse_pairs(a.alg_params, "--alg-param");
  validate(a.cfg);
  const auto instances = load_instances(a.cfg.domain, a.cfg.instances, a.cfg.seed);
  fs::create_directories(a.out);
  const std::string label = algorithm_label(a.cfg.algorithm, a.cfg.params);
  const fs::path path =
      fs::path(a.out) / (file_stem(label + "_" + a.cfg.domain + "_" + a.cfg.cost) + ".jsonl");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_trace_header(out);
  const auto records = run_experiment(a.cfg, instances);
  for (const auto& r : records) {
    write_trace_record(out, r);
    std::cout << r.instance << ' ' << to_string(r.trace.status) << " cost " << format_cost(r.plan_cost)
              << " expansions " << r.trace.total_expansions << '\n';
  }
  std::cout << "wrote " << records.size() << " records to " << path.string() << '\n';
  return 0;
}

struct OracleArgs {
  std::string domain, cost, instance;
  std::size_t max_states = kOracleStateLimit;
};

int do_oracle(const OracleArgs& a) {
  check_cost_model(a.domain, a.cost);
  const auto inst = read_instance(a.domain, a.instance);
  const AnyDomain dom = make_domain(a.domain, a.cost, inst.data);
  const Cost c = std::visit([&](const auto& d) { return oracle_optimal(d, a.max_states); }, dom);
  std::cout << format_cost(c) << '\n';
  return 0;
}

struct CurvesArgs {
  std::string in, out, grid_ms, grid_expansions;
};

int do_curves(const CurvesArgs& a) {
  if (a.grid_ms.empty() == a.grid_expansions.empty())
    throw ConfigError("give exactly one of --grid-ms and --grid-expansions");
  std::vector<double> grid;
  try {
    grid = parse_grid(a.grid_ms.empty() ? a.grid_expansions : a.grid_ms);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const CurveAxis axis = a.grid_ms.empty() ? CurveAxis::expansions : CurveAxis::ms;

  std::vector<fs::path> files;
  if (fs::is_directory(a.in)) {
    for (const auto& e : fs::directory_iterator(a.in))
      if (e.is_regular_file() && e.path().extension() == ".jsonl") files.push_back(e.path());
  } else if (fs::exists(a.in)) {
    files.push_back(a.in);
  }
  if (files.empty()) throw ParseError("no .jsonl trace files in " + a.in);
  std::sort(files.begin(), files.end());

  std::vector<RunTrace> runs;
  std::string problem;  // domain/cost shared by every record
  for (const auto& f : files) {
    std::ifstream in(f);
    std::vector<TraceRecord> recs;
    try {
      recs = read_trace_file(in);
    } catch (const std::invalid_argument& e) {
      throw ParseError(f.string() + ": " + e.what());
    }
    for (const auto& r : recs) {
      const std::string p = r.config.value("domain", "") + "/" + r.config.value("cost", "");
      if (problem.empty()) problem = p;
      if (p != problem) throw ConfigError("traces mix " + problem + " and " + p);
      runs.push_back(to_run_trace(r));
    }
  }
  QualityCurves q;
  try {
    q = build_quality_curves(runs, best_known_costs(runs), grid, axis);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::ofstream out(a.out);
  if (!out) throw std::runtime_error("cannot write " + a.out);
  write_curves_csv(out, q);
  for (const auto& c : q.curves)
    std::cout << c.algorithm << ": final quality " << c.quality.back() << ", solved "
              << c.coverage.back() << '/' << q.instances << '\n';
  return 0;
}

struct GenArgs {
  GenSpec spec;
  std::vector<std::string> params;
  std::string out;
};

int do_gen(GenArgs& a) {
  a.spec.params = parse_pairs(a.params, "--param");
  const auto instances = generate_instances(a.spec);
  fs::create_directories(a.out);
  for (const auto& inst : instances) write_instance(a.out, inst);
  std::cout << "wrote " << instances.size() << ' ' << a.spec.kind << " instances to " << a.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anytime heuristic search experiments"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run one algorithm on a set of instances");
  run_cmd->add_option("--alg", run.cfg.algorithm, "Algorithm id")->required();
  run_cmd->add_option("--alg-param", run.alg_params, "Algorithm parameter key=value (repeatable)");
  run_cmd->add_option("--domain", run.cfg.domain, "Domain id")->required();
  run_cmd->add_option("--cost", run.cfg.cost, "Cost model (variant for blocks)")->required();
  run_cmd->add_option("--instances", run.cfg.instances, "Instance file, directory or gen:key=value,...")
      ->required();
  run_cmd->add_option("--time-limit-ms", run.cfg.time_limit_ms, "Wall-clock limit per run");
  run_cmd->add_option("--expansion-limit", run.cfg.expansion_limit, "Expansion limit per run");
  run_cmd->add_option("--mem-limit-bytes", run.cfg.memory_limit_bytes, "Estimated memory limit per run");
  run_cmd->add_option("--seed", run.cfg.seed, "Seed for generated instances");
  run_cmd->add_option("--out", run.out, "Output directory")->required();

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Optimal cost by uniform-cost search");
  oracle_cmd->add_option("--domain", oracle.domain, "Domain id")->required();
  oracle_cmd->add_option("--cost", oracle.cost, "Cost model")->required();
  oracle_cmd->add_option("--instance", oracle.instance, "Instance file (.map for grids)")->required();
  oracle_cmd->add_option("--max-states", oracle.max_states, "Refuse beyond this many states");

  CurvesArgs curves;
  auto* curves_cmd = app.add_subcommand("curves", "Quality and coverage curves from trace files");
  curves_cmd->add_option("--in", curves.in, "Directory of .jsonl trace files")->required();
  curves_cmd->add_option("--grid-ms", curves.grid_ms, "Time grid a:b:step");
  curves_cmd->add_option("--grid-expansions", curves.grid_expansions, "Expansion grid a:b:step");
  curves_cmd->add_option("--out", curves.out, "CSV output path")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random instances");
  gen_cmd->add_option("--kind", gen.spec.kind, "Domain id")->required();
  gen_cmd->add_option("--count", gen.spec.count, "Number of instances");
  gen_cmd->add_option("--seed", gen.spec.seed, "Random seed");
  gen_cmd->add_option("--param", gen.params, "Generator setting key=value (repeatable)");
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) return do_run(run);
    if (*oracle_cmd) return do_oracle(oracle);
    if (*curves_cmd) return do_curves(curves);
    if (*gen_cmd) return do_gen(gen);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitRuntime;
}
