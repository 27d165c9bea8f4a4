// Benchmarks for the hot paths: coset enumeration, closed-form reports,
// hull construction, and the brute-force oracles they are certified against.

#include <benchmark/benchmark.h>

#include "cuspbound/bounds.hpp"
#include "cuspbound/hull.hpp"
#include "cuspbound/oracle.hpp"

namespace {

using cusp::BlockComposition;
using cusp::FlowVector;

FlowVector bench_flow(int d) { return cusp::random_flow(d, 12345); }

void BM_EnumerateCosets(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FlowVector flow = bench_flow(d);
  const auto parabolic = BlockComposition::maximal(d / 2, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::enumerate_cosets(parabolic, flow));
  }
}
BENCHMARK(BM_EnumerateCosets)->Arg(5)->Arg(6)->Arg(7);

void BM_BoundReport(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FlowVector flow = bench_flow(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::compute_bound_report(flow));
  }
}
BENCHMARK(BM_BoundReport)->Arg(4)->Arg(6)->Arg(8);

void BM_UpperBoundary(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FlowVector flow = bench_flow(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::upper_boundary(d / 2, flow));
  }
}
BENCHMARK(BM_UpperBoundary)->Arg(7)->Arg(9)->Arg(12);

void BM_BruteHull(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FlowVector flow = bench_flow(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::brute_upper_hull(d / 2, flow));
  }
}
BENCHMARK(BM_BruteHull)->Arg(5)->Arg(6)->Arg(7);

void BM_BruteMaxAllParabolics(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FlowVector flow = bench_flow(d);
  const auto phi = cusp::phi_all(flow);
  const auto parabolics = cusp::enumerate_parabolics(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::brute_max(flow, phi, parabolics));
  }
}
BENCHMARK(BM_BruteMaxAllParabolics)->Arg(5)->Arg(6);

void BM_VerifyAll(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FlowVector flow = bench_flow(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::verify_all(flow));
  }
}
BENCHMARK(BM_VerifyAll)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
