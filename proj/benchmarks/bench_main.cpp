#include <benchmark/benchmark.h>

#include "cvxmetric/geometry.hpp"
#include "cvxmetric/lp.hpp"
#include "cvxmetric/metrics.hpp"
#include "cvxmetric/oracles.hpp"
#include "cvxmetric/sampling.hpp"

namespace {

using namespace cvxmetric;

ConvexBody bench_body(BodyKind kind, std::size_t dim) { return random_body(dim, kind, 7); }

void bm_tau(benchmark::State& state, BodyKind kind) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  ConvexBody body = bench_body(kind, dim);
  std::vector<Vector> pts = sample_interior(body, 11, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tau(body, pts[0], pts[1]));
}

void bm_tau_ball(benchmark::State& s) { bm_tau(s, BodyKind::Ball); }
void bm_tau_vpolytope(benchmark::State& s) { bm_tau(s, BodyKind::VPolytope); }
void bm_tau_hpolytope(benchmark::State& s) { bm_tau(s, BodyKind::HPolytope); }

void bm_hilbert(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  ConvexBody body = bench_body(BodyKind::HPolytope, dim);
  std::vector<Vector> pts = sample_interior(body, 11, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(body, pts[0], pts[1]));
}

void bm_lp_support(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  ConvexBody body = bench_body(BodyKind::HPolytope, dim);
  Vector d(dim, 0.0);
  d[0] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(support_function(body, d));
}

void bm_distance_matrix(benchmark::State& state) {
  const std::size_t count = static_cast<std::size_t>(state.range(0));
  ConvexBody body = bench_body(BodyKind::Ball, 4);
  std::vector<Vector> pts = sample_interior(body, 11, count);
  for (auto _ : state)
    benchmark::DoNotOptimize(distance_matrix(body, pts, MetricKind::Hilbert));
}

BENCHMARK(bm_tau_ball)->Arg(2)->Arg(8);
BENCHMARK(bm_tau_vpolytope)->Arg(2)->Arg(8);
BENCHMARK(bm_tau_hpolytope)->Arg(2)->Arg(8);
BENCHMARK(bm_hilbert)->Arg(2)->Arg(8);
BENCHMARK(bm_lp_support)->Arg(2)->Arg(8);
BENCHMARK(bm_distance_matrix)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
