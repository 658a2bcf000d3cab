#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

#include "unkry/kernels.hpp"

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

void bench_matvec_serial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vector(n * n, 1);
  const auto x = random_vector(n, 2);
  std::vector<double> y(n);
  for (auto _ : state) {
    unkry::kernels::serial::matvec(n, a.data(), x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n * n));
}

void bench_matvec_dispatch(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vector(n * n, 1);
  const auto x = random_vector(n, 2);
  std::vector<double> y(n);
  for (auto _ : state) {
    unkry::kernels::matvec(n, a.data(), x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n * n));
}

void bench_axpy_serial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto x = random_vector(n, 3);
  auto y = random_vector(n, 4);
  for (auto _ : state) {
    unkry::kernels::serial::axpy(n, 0.5, x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
    benchmark::ClobberMemory();
  }
}

void bench_axpy_dispatch(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto x = random_vector(n, 3);
  auto y = random_vector(n, 4);
  for (auto _ : state) {
    unkry::kernels::axpy(n, 0.5, x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
    benchmark::ClobberMemory();
  }
}

}  // namespace

// Sizes straddle the parallelization threshold so both code paths show up.
BENCHMARK(bench_matvec_serial)->Arg(64)->Arg(256)->Arg(1024)->Arg(2048);
BENCHMARK(bench_matvec_dispatch)->Arg(64)->Arg(256)->Arg(1024)->Arg(2048);
BENCHMARK(bench_axpy_serial)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bench_axpy_dispatch)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
