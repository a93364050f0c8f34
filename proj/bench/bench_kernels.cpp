// Serial reference path against the OpenMP path for each parallel kernel.
// Results of both paths are bitwise identical (see the unit tests).

#include <benchmark/benchmark.h>

#include "ladderlab/execution.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/quadrature.hpp"
#include "ladderlab/sieve.hpp"
#include "ladderlab/zeta.hpp"

using namespace ladderlab;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

const CumulativeTable& table() {
  static const CumulativeTable t = build_checkpoints(30000.0);
  return t;
}

void BM_TableBuild(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(build_checkpoints(5000.0, kDefaultMaxStep, kDefaultRelTol, mode(s)));
}

void BM_FindZeros(benchmark::State& s) {
  ZeroScanOptions o;
  o.execution = mode(s);
  for (auto _ : s) benchmark::DoNotOptimize(find_zeros(10000.0, 10400.0, o));
}

void BM_Sieve(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(sieve_pi(2e7, mode(s)));
}

void BM_LadderBuild(benchmark::State& s) {
  const LadderSolver solver(table(), MuSpec::k_log(7.0));
  const auto grid = linear_grid(200.0, 800.0, 16);
  for (auto _ : s) benchmark::DoNotOptimize(solver.build(grid, mode(s)));
}

void BM_LongIntegral(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(interval_integral(50000.0, 52000.0, 1e-10, mode(s)));
}

}  // namespace

BENCHMARK(BM_TableBuild)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindZeros)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sieve)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LadderBuild)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LongIntegral)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
