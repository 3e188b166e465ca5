#include <benchmark/benchmark.h>

#include "dynwalk/generators.hpp"
#include "dynwalk/lifting.hpp"
#include "dynwalk/oracle.hpp"
#include "dynwalk/structure.hpp"
#include "dynwalk/theorems.hpp"

using namespace dynwalk;

static void BM_HypothesisReport(benchmark::State& state) {
  const auto g = gen_complete_multigraph(static_cast<std::size_t>(state.range(0)), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hypothesis_report(g));
}
BENCHMARK(BM_HypothesisReport)->Arg(8)->Arg(16)->Arg(32);

static void BM_LongCycle(benchmark::State& state) {
  const auto g = gen_glued_complete(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(long_dynamic_cycle(g, state.range(0) - 1));
}
BENCHMARK(BM_LongCycle)->Arg(4)->Arg(8)->Arg(16);

static void BM_OreH(benchmark::State& state) {
  const auto g = gen_complete_multigraph(static_cast<std::size_t>(state.range(0)), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ore_hamiltonian_h_cycle(g));
}
BENCHMARK(BM_OreH)->Arg(6)->Arg(12)->Arg(24);

static void BM_DiracDynamic(benchmark::State& state) {
  const auto g = gen_complete_multigraph(static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dirac_dynamic(g));
}
BENCHMARK(BM_DiracDynamic)->Arg(6)->Arg(12)->Arg(24);

static void BM_LiftCycle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto g = gen_complete_multigraph(n, 2, 3);
  std::vector<VertexIndex> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(lift_cycle(g, cycle));
}
BENCHMARK(BM_LiftCycle)->Arg(8)->Arg(32)->Arg(128);

static void BM_OracleLongestDynamicCycle(benchmark::State& state) {
  const auto g = gen_complete_multigraph(static_cast<std::size_t>(state.range(0)), 2, 2);
  OracleQuery q;
  q.target = OracleTarget::LongestDynamicCycle;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_solve(g, q));
}
BENCHMARK(BM_OracleLongestDynamicCycle)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK_MAIN();
