#include <benchmark/benchmark.h>

#include <cmath>

#include "logcrit/nehari.hpp"
#include "logcrit/solvers.hpp"

using namespace logcrit;

namespace {

RadialField bump(std::shared_ptr<const RadialGrid> grid, double amp) {
  double R = grid->radius();
  Vec vals(grid->n());
  for (int i = 0; i < grid->n(); ++i) {
    double x = grid->nodes()[i] / R;
    vals[i] = amp * (1.0 - x * x) * (1.0 + 0.3 * std::sin(2.0 * x));
  }
  return RadialField(std::move(grid), std::move(vals));
}

ParameterSet bench_params() {
  ParameterSet p;
  p.lambda1 = 0.3;
  p.theta1 = 0.8;
  p.mu2 = 1.5;
  p.theta2 = 1.2;
  p.beta = 0.1;
  return p;
}

}  // namespace

static void BM_riesz_solve(benchmark::State& state) {
  auto g = make_grid(1.0, state.range(0));
  RadialField f = bump(g, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(riesz_solve(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_riesz_solve)->Range(128, 4096)->Complexity(benchmark::oN);

static void BM_energy(benchmark::State& state) {
  auto g = make_grid(1.0, state.range(0));
  StatePair s(bump(g, 1.0), bump(g, 0.7));
  ParameterSet p = bench_params();
  for (auto _ : state) benchmark::DoNotOptimize(energy_L(s, p).total);
}
BENCHMARK(BM_energy)->Range(128, 4096);

static void BM_gradient(benchmark::State& state) {
  auto g = make_grid(1.0, state.range(0));
  StatePair s(bump(g, 1.0), bump(g, 0.7));
  ParameterSet p = bench_params();
  for (auto _ : state) benchmark::DoNotOptimize(grad_L(s, p).norm);
}
BENCHMARK(BM_gradient)->Range(128, 4096);

static void BM_nehari_projection(benchmark::State& state) {
  auto g = make_grid(1.0, state.range(0));
  StatePair s(bump(g, 1.0), bump(g, 0.7));
  ParameterSet p = bench_params();
  for (auto _ : state)
    benchmark::DoNotOptimize(project_to_nehari(s, p).iterations);
}
BENCHMARK(BM_nehari_projection)->Range(128, 1024);

static void BM_eigenpair(benchmark::State& state) {
  auto g = make_grid(1.0, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(principal_eigenpair(g).lambda);
}
BENCHMARK(BM_eigenpair)->Range(128, 1024);

BENCHMARK_MAIN();
