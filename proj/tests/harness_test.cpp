#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rectsearch/domains/explicit_graph.hpp"
#include "rectsearch/harness/metrics.hpp"
#include "rectsearch/harness/oracle.hpp"
#include "rectsearch/harness/record.hpp"
#include "rectsearch/harness/runner.hpp"

using namespace rectsearch;

namespace {

AnytimeTrace trace_of(std::vector<std::pair<std::uint64_t, Cost>> events) {
  AnytimeTrace t;
  for (auto [x, c] : events) t.events.push_back({static_cast<double>(x), x, x, c});
  return t;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("rectsearch-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

RunConfig tiles_config(const std::string& alg) {
  RunConfig c;
  c.algorithm = alg;
  c.domain = "tiles";
  c.cost = "unit";
  c.instances = "gen:count=3,width=3,height=3";
  c.expansion_limit = 20000;
  c.seed = 5;
  return c;
}

}  // namespace

TEST(Quality, Examples) {
  EXPECT_EQ(quality(10, kInfiniteCost), 0.0);
  EXPECT_EQ(quality(10, 10), 1.0);
  EXPECT_EQ(quality(10, 20), 0.5);
  EXPECT_EQ(quality(0, 0), 1.0);
}

TEST(Quality, IncumbentBelowBestKnownIsAnError) {
  EXPECT_THROW(quality(10, 9), std::logic_error);
  EXPECT_THROW(quality(-1, 3), std::invalid_argument);
}

TEST(Curves, SingleRunStepsAtSolution) {
  std::vector<RunTrace> runs{{"a", "x", trace_of({{5, 7}})}};
  auto q = build_quality_curves(runs, {{"x", 7}}, {0, 4, 5, 9}, CurveAxis::expansions);
  ASSERT_EQ(q.curves.size(), 1u);
  EXPECT_EQ(q.curves[0].quality, (std::vector<double>{0, 0, 1, 1}));
  EXPECT_EQ(q.curves[0].coverage, (std::vector<std::size_t>{0, 0, 1, 1}));
  ASSERT_TRUE(q.curves[0].full_coverage_at);
  EXPECT_EQ(*q.curves[0].full_coverage_at, 5);
}

TEST(Curves, CostAveragesUseMutuallySolvedInstances) {
  // Only "a" solves y, so y counts for quality (0 for b) but not for cost.
  std::vector<RunTrace> runs{{"a", "x", trace_of({{1, 10}})},
                             {"a", "y", trace_of({{1, 4}})},
                             {"b", "x", trace_of({{2, 20}})},
                             {"b", "y", trace_of({})}};
  auto best = best_known_costs(runs);
  EXPECT_EQ(best.at("x"), 10);
  auto q = build_quality_curves(runs, best, {3}, CurveAxis::expansions);
  ASSERT_EQ(q.curves.size(), 2u);
  EXPECT_EQ(q.mutually_solved[0], 1u);
  EXPECT_DOUBLE_EQ(q.curves[0].mean_cost[0], 10);
  EXPECT_DOUBLE_EQ(q.curves[1].mean_cost[0], 20);
  EXPECT_DOUBLE_EQ(q.curves[0].quality[0], 1.0);
  EXPECT_DOUBLE_EQ(q.curves[1].quality[0], 0.25);
  EXPECT_TRUE(q.curves[0].full_coverage_at.has_value());
  EXPECT_FALSE(q.curves[1].full_coverage_at.has_value());
}

TEST(Curves, LowCoverageAlgorithmsLeaveTheCostAverage) {
  std::vector<RunTrace> runs;
  for (int i = 0; i < 10; ++i) {
    const std::string inst = "i" + std::to_string(i);
    runs.push_back({"good", inst, trace_of({{1, 5}})});
    runs.push_back({"poor", inst, i == 0 ? trace_of({{1, 6}}) : trace_of({})});
  }
  auto q = build_quality_curves(runs, best_known_costs(runs), {2}, CurveAxis::expansions);
  EXPECT_FALSE(q.curves[0].omitted_from_cost);
  EXPECT_TRUE(q.curves[1].omitted_from_cost);
  EXPECT_EQ(q.mutually_solved[0], 10u);
  EXPECT_DOUBLE_EQ(q.curves[0].mean_cost[0], 5);
  EXPECT_TRUE(std::isnan(q.curves[1].mean_cost[0]));
}

TEST(Curves, EmptyTracesGiveZeroCurves) {
  std::vector<RunTrace> runs{{"a", "x", {}}, {"b", "x", {}}};
  auto q = build_quality_curves(runs, {{"x", 3}}, {0, 10, 20});
  for (const auto& c : q.curves) {
    EXPECT_EQ(c.quality, (std::vector<double>{0, 0, 0}));
    EXPECT_EQ(c.coverage, (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_FALSE(c.full_coverage_at);
  }
}

TEST(Curves, MismatchedInstanceSetsAreRejected) {
  std::vector<RunTrace> runs{{"a", "x", {}}, {"a", "y", {}}, {"b", "x", {}}};
  EXPECT_THROW(build_quality_curves(runs, {{"x", 1}, {"y", 1}}, {0}), std::invalid_argument);
  std::vector<RunTrace> dup{{"a", "x", {}}, {"a", "x", {}}};
  EXPECT_THROW(build_quality_curves(dup, {{"x", 1}}, {0}), std::invalid_argument);
  EXPECT_THROW(build_quality_curves({{"a", "x", {}}}, {}, {0}), std::invalid_argument);
}

TEST(Curves, QualityNeverDecreasesAlongTheGrid) {
  std::vector<RunTrace> runs{{"a", "x", trace_of({{3, 30}, {8, 20}, {50, 10}})},
                             {"a", "y", trace_of({{1, 9}, {2, 8}})}};
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(i);
  auto q = build_quality_curves(runs, best_known_costs(runs), grid, CurveAxis::expansions);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    EXPECT_GE(q.curves[0].quality[i], q.curves[0].quality[i - 1]);
    EXPECT_GE(q.curves[0].coverage[i], q.curves[0].coverage[i - 1]);
  }
}

TEST(Curves, CsvHasVersionedHeader) {
  std::vector<RunTrace> runs{{"a", "x", trace_of({{5, 7}})}};
  auto q = build_quality_curves(runs, {{"x", 7}}, {0, 5});
  std::ostringstream out;
  write_curves_csv(out, q);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCurvesCsvHeader);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);  // column names + two grid points
}

TEST(Grid, Parse) {
  EXPECT_EQ(parse_grid("0:10:5"), (std::vector<double>{0, 5, 10}));
  EXPECT_EQ(parse_grid("1:2:0.5"), (std::vector<double>{1, 1.5, 2}));
  EXPECT_THROW(parse_grid("0:10"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0:10:0"), std::invalid_argument);
  EXPECT_THROW(parse_grid("a:10:1"), std::invalid_argument);
}

TEST(Oracle, Examples) {
  ExplicitGraph g;
  g.add_node(0, 0, true);
  EXPECT_EQ(oracle_optimal(g), 0);
  PancakeDomain p(PancakeInstance{{4, 3, 2, 1}}, PancakeCost::unit);
  EXPECT_EQ(oracle_optimal(p), 1);
}

TEST(Oracle, RefusesLargeSpaces) {
  Rng rng(1);
  TilesDomain dom(random_tiles(4, 4, rng), TileCost::unit);
  EXPECT_THROW(oracle_optimal(dom, 1000), OracleTooLarge);
}

TEST(RunConfig, Validation) {
  auto c = tiles_config("rectangle");
  EXPECT_NO_THROW(validate(c));
  auto unbounded = c;
  unbounded.expansion_limit.reset();
  EXPECT_THROW(validate(unbounded), ConfigError);
  unbounded.time_limit_ms = 1000;
  EXPECT_NO_THROW(validate(unbounded));
  auto bad = c;
  bad.algorithm = "nope";
  EXPECT_THROW(validate(bad), ConfigError);
  bad = c;
  bad.cost = "blue";
  EXPECT_THROW(validate(bad), ConfigError);
  bad = c;
  bad.domain = "chess";
  EXPECT_THROW(validate(bad), ConfigError);
  bad = c;
  bad.params["width"] = "3";
  EXPECT_THROW(validate(bad), ConfigError);
  bad = c;
  bad.params["aspect"] = "0";
  EXPECT_THROW(validate(bad), ConfigError);
}

TEST(RunConfig, AlgorithmParameters) {
  auto a = parse_algorithm("arastar", {{"schedule", "2.5-0.02"}});
  EXPECT_DOUBLE_EQ(a.schedule.weight(1), 2.48);
  a = parse_algorithm("arastar", {{"schedule", "5,3,2,1.5,1"}});
  EXPECT_EQ(a.schedule.weight(2), 2);
  EXPECT_THROW(parse_algorithm("arastar", {{"schedule", "5,3"}}), ConfigError);
  a = parse_algorithm("dfs", {{"order_children", "false"}});
  EXPECT_FALSE(a.order_children);
  EXPECT_THROW(parse_algorithm("wastar", {{"weight", "0.5"}}), ConfigError);
  a = parse_algorithm("beam", {{"width", "7"}, {"order", "f"}});
  EXPECT_EQ(a.width, 7u);
  EXPECT_EQ(a.ordering.primary, OrderKey::f);
  for (const auto& id : algorithm_ids()) EXPECT_NO_THROW(parse_algorithm(id, {}));
}

TEST(Generator, SameSeedSameFiles) {
  for (const std::string kind : {"tiles", "pancake", "blocks", "vacuum", "grid"}) {
    GenSpec g;
    g.kind = kind;
    g.count = 3;
    g.seed = 9;
    const auto a = scratch_dir("gen-a-" + kind), b = scratch_dir("gen-b-" + kind);
    for (const auto& inst : generate_instances(g)) write_instance(a, inst);
    for (const auto& inst : generate_instances(g)) write_instance(b, inst);
    for (const auto& e : std::filesystem::directory_iterator(a)) {
      std::ifstream fa(e.path()), fb(b / e.path().filename());
      std::stringstream sa, sb;
      sa << fa.rdbuf();
      sb << fb.rdbuf();
      EXPECT_FALSE(sa.str().empty());
      EXPECT_EQ(sa.str(), sb.str()) << e.path();
    }
    // Files read back into the same instances.
    auto loaded = load_instances(kind, a.string(), 0);
    ASSERT_EQ(loaded.size(), 3u);
    EXPECT_EQ(loaded[0].name, kind + "-0000");
  }
}

TEST(Generator, SpecParsing) {
  auto g = parse_gen_spec("count=4,seed=7,width=4,height=4", "tiles", 1);
  EXPECT_EQ(g.count, 4u);
  EXPECT_EQ(g.seed, 7u);
  auto insts = generate_instances(g);
  ASSERT_EQ(insts.size(), 4u);
  EXPECT_EQ(std::get<TilesInstance>(insts[0].data).width, 4);
  EXPECT_THROW(generate_instances(parse_gen_spec("colour=3", "tiles", 1)), ConfigError);
  EXPECT_THROW(parse_gen_spec("count", "tiles", 1), ConfigError);
  EXPECT_THROW(generate_instances(parse_gen_spec("density=1.5", "grid", 1)), ConfigError);
  EXPECT_THROW(generate_instances(parse_gen_spec("", "chess", 1)), ConfigError);
}

TEST(Generator, TilesAreSolvable) {
  GenSpec g;
  g.kind = "tiles";
  g.count = 100;
  g.params["width"] = "4";
  g.params["height"] = "4";
  for (const auto& inst : generate_instances(g))
    EXPECT_TRUE(TilesDomain::solvable(std::get<TilesInstance>(inst.data)));
}

TEST(Loading, ParseFailuresAreReported) {
  const auto dir = scratch_dir("bad");
  std::ofstream(dir / "broken.txt") << "3 3\n1 2 3\n";
  EXPECT_THROW(load_instances("tiles", (dir / "broken.txt").string(), 0), ParseError);
  EXPECT_THROW(load_instances("tiles", (dir / "missing.txt").string(), 0), ParseError);
  std::ofstream(dir / "unsolvable.txt") << "3 3\n0 2 1 3 4 5 6 7 8\n";
  auto insts = load_instances("tiles", (dir / "unsolvable.txt").string(), 0);
  EXPECT_THROW(make_domain("tiles", "unit", insts[0].data), ParseError);
}

TEST(Experiment, OneRecordPerRun) {
  std::vector<TraceRecord> all;
  for (const std::string alg : {"rectangle", "aees"}) {
    auto c = tiles_config(alg);
    auto recs = run_experiment(c, load_instances(c.domain, c.instances, c.seed));
    all.insert(all.end(), recs.begin(), recs.end());
  }
  ASSERT_EQ(all.size(), 6u);
  for (const auto& r : all) EXPECT_EQ(r.trace.final_cost(), r.plan_cost);
}

TEST(Experiment, RerunsAreIdenticalWithoutTiming) {
  for (const std::string alg : {"rectangle", "arastar", "cabs", "dfs", "ilds", "aees"}) {
    auto c = tiles_config(alg);
    c.expansion_limit = 3000;
    const auto insts = load_instances(c.domain, c.instances, c.seed);
    const auto a = run_experiment(c, insts);
    const auto b = run_experiment(c, insts);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(timing_free(a[i]).dump(), timing_free(b[i]).dump());
  }
}

TEST(Records, RoundTrip) {
  auto c = tiles_config("awastar");
  c.params["weight"] = "2";
  const auto recs = run_experiment(c, load_instances(c.domain, c.instances, c.seed));
  std::stringstream file;
  write_trace_header(file);
  for (const auto& r : recs) write_trace_record(file, r);
  const auto back = read_trace_file(file);
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(to_json(back[i]), to_json(recs[i]));
    EXPECT_EQ(back[i].trace.events, recs[i].trace.events);
  }
  EXPECT_EQ(recs[0].algorithm, "awastar(weight=2)");
  std::stringstream wrong("{\"schema\":\"other\"}\n");
  EXPECT_THROW(read_trace_file(wrong), std::invalid_argument);
}
