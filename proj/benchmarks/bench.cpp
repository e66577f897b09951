#include <benchmark/benchmark.h>

#include <cmath>

#include "peglab/adf.hpp"
#include "peglab/bridge.hpp"
#include "peglab/pinch.hpp"
#include "peglab/square.hpp"

using namespace peglab;

namespace {

DFunction tent(double h) { return DFunction::interval({-1, 0, 1}, {0, h, 0}); }

void BM_FindSquare(benchmark::State& state) {
  const DFunction f = tent(-0.5), g = tent(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(find_inscribed_square(f, g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FindSquare)->Arg(256)->Arg(2048);

void BM_ConservedResidual(benchmark::State& state) {
  SquareTrace<double> t;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    const double s = 0.785 * i / (n - 1);
    t.grid.push_back(s);
    t.x.push_back(0);
    t.y.push_back(0);
    t.a.push_back(std::cos(s));
    t.b.push_back(std::sin(s));
  }
  for (auto _ : state) benchmark::DoNotOptimize(conserved_residual(t));
}
BENCHMARK(BM_ConservedResidual)->Arg(10000);

void BM_IdentitySuite(benchmark::State& state) {
  const auto xs = sample_valid_instances(7, 64, {static_cast<int>(state.range(0))}, Rational(8));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(identity_suite(xs[i++ % xs.size()]));
}
BENCHMARK(BM_IdentitySuite)->Arg(1)->Arg(3)->Arg(5);

void BM_Search(benchmark::State& state) {
  SearchConfig cfg;
  cfg.grid = integer_grid(-state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_counterexamples(cfg));
}
BENCHMARK(BM_Search)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BuildAndTrace(benchmark::State& state) {
  const auto xs = sample_valid_instances(9, 16, {3}, Rational(8));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto g = genericize(build_curves(xs[i++ % xs.size()]).curves, i);
    benchmark::DoNotOptimize(trace_cycle(g, first_crossing_state(g, round_trip_delta(g))));
  }
}
BENCHMARK(BM_BuildAndTrace)->Unit(benchmark::kMillisecond);

void BM_PhiRoundTrip(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_n(phi_n_inv({x, 1.5}, 4.0), 4.0));
    x = x > 3.9 ? 0.1 : x + 0.01;
  }
}
BENCHMARK(BM_PhiRoundTrip);

}  // namespace

BENCHMARK_MAIN();
