#include <benchmark/benchmark.h>

#include "qhyp/billiard.hpp"
#include "qhyp/duality.hpp"
#include "qhyp/fixtures.hpp"
#include "qhyp/kernel.hpp"
#include "qhyp/maxprin.hpp"
#include "qhyp/moments.hpp"
#include "qhyp/symbol.hpp"
#include "qhyp/traces.hpp"

namespace {

using namespace qhyp;

void BM_FindRoots(benchmark::State& state) {
  const QuarticSymbol sym{{1, 0, -5, 0, 4}};
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(sym));
}

void BM_DetectPeriod(benchmark::State& state) {
  const auto map = BilliardMap::from_system(irrational_fixtures().front().system);
  const PeriodOptions opt{static_cast<int>(state.range(0)), 1e-9};
  for (auto _ : state) benchmark::DoNotOptimize(detect_period(map, 1.0, opt));
}

void BM_KernelScan(benchmark::State& state) {
  const auto sys = rational_fixtures().front().system;
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_boundary_coefficients(q, sys));
}

void BM_TildeTraces(benchmark::State& state) {
  const auto sys = irrational_fixtures().front().system;
  const BoundaryRule circle = circle_quadrature(static_cast<int>(state.range(0)));
  const BiPoly u = BiPoly::monomial(3, 2, 0.5) + BiPoly::monomial(1, 1, -1.0) + BiPoly::monomial(0, 4, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(tilde_traces(u, sys, circle));
}

void BM_DirichletMoments(benchmark::State& state) {
  const auto sys = irrational_fixtures().front().system;
  const BoundaryRule circle = circle_quadrature(512);
  const QuadratureRule disk = disk_quadrature(32, 64);
  const std::vector<double> zero(circle.size(), 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dirichlet_moments(BiPoly{}, zero, zero, sys, circle, disk));
}

void BM_DiskTransform(benchmark::State& state) {
  const auto sys = rational_fixtures().front().system;
  const BiPoly u = solve_boundary_coefficients(4, sys).solutions.front().u;
  const DiskTransform w(u);
  const auto xs = default_xi_samples();
  for (auto _ : state)
    for (const Vec2& xi : xs) benchmark::DoNotOptimize(w(xi));
}

void BM_MaxprinSweep(benchmark::State& state) {
  const auto sys = pentagon_fixture_system();
  const auto p = pentagon_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(run_seeded(sys, p, 0, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_FindRoots);
BENCHMARK(BM_DetectPeriod)->Arg(1000)->Arg(10000);
BENCHMARK(BM_KernelScan)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TildeTraces)->Arg(128)->Arg(512);
BENCHMARK(BM_DirichletMoments)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiskTransform)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MaxprinSweep)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
