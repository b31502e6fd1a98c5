// Parallel kernels versus the serial reference implementations, on
// inputs large enough for the OpenMP paths to engage.

#include <benchmark/benchmark.h>

#include "mac/exact.hpp"
#include "mac/generators.hpp"
#include "mac/goodness.hpp"
#include "mac/greedy.hpp"
#include "mac/reference.hpp"
#include "mac/rng.hpp"
#include "mac/verify.hpp"

namespace {

mac::Graph bench_graph(int n, double p) {
  mac::Rng rng(12345);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return mac::Graph::from_edges(n, edges);
}

mac::Coloring bench_coloring(int n, long long k) {
  mac::Rng rng(777);
  std::vector<long long> values(n);
  for (int v = 0; v < n; ++v) values[v] = rng.range(1, k);
  return mac::Coloring::from_ints(values);
}

// Every coloring of this graph is invalid (two pendants on one
// support), so enumeration always scans the full space.
mac::Graph exhaustive_no_instance(int n) {
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}};
  for (int v = 3; v < n; ++v) edges.emplace_back(v - 1, v);
  return mac::Graph::from_edges(n, edges);
}

void BM_verify_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = bench_graph(n, 16.0 / n);
  auto c = bench_coloring(n, 64);
  for (auto _ : state) {
    auto report = mac::verify(g, c);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_verify_parallel)->Arg(2000)->Arg(20000);

void BM_verify_reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = bench_graph(n, 16.0 / n);
  auto c = bench_coloring(n, 64);
  for (auto _ : state) {
    auto report = mac::reference::verify(g, c);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_verify_reference)->Arg(2000)->Arg(20000);

void BM_mod_verify_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = bench_graph(n, 16.0 / n);
  auto c = bench_coloring(n, 64);
  for (auto _ : state) {
    auto report = mac::mod_verify(g, c, 64);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_mod_verify_parallel)->Arg(20000);

void BM_mod_verify_reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = bench_graph(n, 16.0 / n);
  auto c = bench_coloring(n, 64);
  for (auto _ : state) {
    auto report = mac::reference::mod_verify(g, c, 64);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_mod_verify_reference)->Arg(20000);

void BM_brute_force_parallel(benchmark::State& state) {
  auto g = exhaustive_no_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mac::brute_force_oracle(g, 3));
  }
}
BENCHMARK(BM_brute_force_parallel)->Arg(12)->Arg(14);

void BM_brute_force_reference(benchmark::State& state) {
  auto g = exhaustive_no_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mac::reference::brute_force(g, 3));
  }
}
BENCHMARK(BM_brute_force_reference)->Arg(12);

void BM_greedy_recolor(benchmark::State& state) {
  auto g = mac::random_good_graph(static_cast<int>(state.range(0)), 0.1, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mac::greedy_recolor(g));
  }
}
BENCHMARK(BM_greedy_recolor)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
