#include <benchmark/benchmark.h>

#include "relocation/generator.hpp"
#include "relocation/heuristic.hpp"
#include "relocation/matching.hpp"
#include "relocation/solver.hpp"

namespace {

using namespace relo;

Instance make_instance(int stations, int imbalanced, int k, int L,
                       long long T, unsigned long long seed) {
  GeneratorParams gp;
  gp.stations = stations;
  gp.imbalanced = imbalanced;
  gp.depots = 1;
  gp.k = k;
  gp.L = L;
  gp.T = T;
  gp.seed = seed;
  return generate_instance(gp);
}

void BM_Matching(benchmark::State& state) {
  const Instance inst =
      make_instance(static_cast<int>(state.range(0)), state.range(0) / 2, 2,
                    2, 100000, 7);
  const std::vector<Task> tasks =
      derive_tasks(inst.network, inst.z0, inst.zT);
  const BipartiteInstance bi = build_bipartite(tasks, inst.metric);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_cost_perfect_p_matching(bi));
  }
}
BENCHMARK(BM_Matching)->Arg(10)->Arg(30)->Arg(50);

void BM_PdpInsert(benchmark::State& state) {
  const Instance inst =
      make_instance(static_cast<int>(state.range(0)), state.range(0) / 2, 4,
                    3, 100000, 11);
  const std::vector<Task> tasks =
      derive_tasks(inst.network, inst.z0, inst.zT);
  const BipartiteInstance bi = build_bipartite(tasks, inst.metric);
  const std::vector<TransportRequest> trs =
      matching_to_requests(bi, min_cost_perfect_p_matching(bi));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdp_insert(inst, trs, 1));
  }
}
BENCHMARK(BM_PdpInsert)->Arg(10)->Arg(20)->Arg(40);

void BM_ExactSmall(benchmark::State& state) {
  const Instance inst = make_instance(3, 2, 1, 2, 40, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact(inst, Variant::Backhaul));
  }
}
BENCHMARK(BM_ExactSmall);

}  // namespace

BENCHMARK_MAIN();
