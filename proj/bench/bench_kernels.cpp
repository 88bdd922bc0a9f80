// Parallel kernels against their serial reference.

#include <benchmark/benchmark.h>

#include "lgkit/cohomology.hpp"
#include "lgkit/reports.hpp"

using namespace lgkit;

namespace {

ExecPolicy policy(bool parallel) {
  ExecPolicy p;
  p.parallel = parallel;
  return p;
}

void BM_Jacobian(benchmark::State& st, ModelSpec (*model)(), bool parallel) {
  ModelSpec s = model();
  for (auto _ : st) benchmark::DoNotOptimize(jacobian_ring_charge0(s, 4 * s.max_degree(), policy(parallel)).total);
}

void BM_Koszul(benchmark::State& st, ModelSpec (*model)(), bool parallel) {
  ModelSpec s = model();
  for (auto _ : st) benchmark::DoNotOptimize(koszul_cohomology(s, 4 * s.max_degree(), policy(parallel)).by_degree);
}

void BM_dRham0(benchmark::State& st, ModelSpec (*model)(), bool parallel) {
  ModelSpec s = model();
  for (auto _ : st) benchmark::DoNotOptimize(dRham0_cohomology(s, 4 * s.max_degree(), policy(parallel)).by_degree);
}

void BM_Geometry(benchmark::State& st, ModelSpec (*model)(), bool parallel) {
  ModelSpec s = model();
  RunConfig cfg;
  cfg.samples = 50;
  cfg.parallel = parallel;
  for (auto _ : st) benchmark::DoNotOptimize(geometry_report(s, cfg).pass());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Jacobian, quintic_serial, fermat_quintic, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Jacobian, quintic_parallel, fermat_quintic, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Koszul, quadric_pair_serial, quadric_pair, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Koszul, quadric_pair_parallel, quadric_pair, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_dRham0, quadric_pair_serial, quadric_pair, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_dRham0, quadric_pair_parallel, quadric_pair, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Geometry, cubic_serial, fermat_cubic, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Geometry, cubic_parallel, fermat_cubic, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
