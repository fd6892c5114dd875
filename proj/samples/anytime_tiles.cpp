// Runs rectangle search on a random 15-puzzle and prints each improving
// solution as it is found, then compares with ARA* under the same budget.

#include <cstdio>
#include <cstdlib>

#include "rectsearch/best_first.hpp"
#include "rectsearch/domains/generate.hpp"
#include "rectsearch/domains/tiles.hpp"
#include "rectsearch/rectangle.hpp"

using namespace rectsearch;

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  Rng rng(seed);
  const TilesDomain dom(random_tiles(4, 4, rng), TileCost::unit);
  Limits limits;
  limits.expansions = 2'000'000;

  RectangleConfig cfg;
  cfg.limits = limits;
  const auto rect = rectangle_search(dom, cfg);
  std::printf("rectangle(1), h(start) = %g\n", dom.h(dom.initial_state()));
  for (const auto& e : rect.trace.events)
    std::printf("  %10llu expansions  %8.1f ms  cost %g\n", static_cast<unsigned long long>(e.expansions),
                e.elapsed_ms, e.cost);
  std::printf("  stopped: %s after %llu expansions\n", std::string(to_string(rect.trace.status)).c_str(),
              static_cast<unsigned long long>(rect.trace.total_expansions));

  const auto ara = arastar_search(dom, WeightSchedule::list({5, 3, 2, 1.5, 1}), limits);
  std::printf("ARA*(5,3,2,1.5,1)\n");
  for (const auto& e : ara.trace.events)
    std::printf("  %10llu expansions  %8.1f ms  cost %g\n", static_cast<unsigned long long>(e.expansions),
                e.elapsed_ms, e.cost);
  std::printf("  stopped: %s after %llu expansions\n", std::string(to_string(ara.trace.status)).c_str(),
              static_cast<unsigned long long>(ara.trace.total_expansions));
}
