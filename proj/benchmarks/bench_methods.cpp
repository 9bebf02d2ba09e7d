#include <benchmark/benchmark.h>

#include "bellpart/bell.hpp"
#include "bellpart/partition.hpp"
#include "bellpart/pentagonal.hpp"

namespace {

void BM_p_euler(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellpart::p_euler(n));
    }
}
BENCHMARK(BM_p_euler)->Arg(50)->Arg(200)->Arg(1000)->Arg(5000);

void BM_p_bell(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellpart::p_bell(n));
    }
}
BENCHMARK(BM_p_bell)->Arg(25)->Arg(50)->Arg(100);

void BM_p_corollary(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellpart::p_corollary(n));
    }
}
BENCHMARK(BM_p_corollary)->Arg(25)->Arg(50)->Arg(100);

void BM_p_theta(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellpart::p_theta(n));
    }
}
BENCHMARK(BM_p_theta)->Arg(12)->Arg(18)->Arg(24);

void BM_p_naive(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellpart::p_naive(n));
    }
}
BENCHMARK(BM_p_naive)->Arg(20)->Arg(30);

void BM_bell_table_lambda(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const bellpart::BellArguments lambda = bellpart::lambda_arguments(n);
    for (auto _ : state) {
        bellpart::BellTable table(lambda, n);
        benchmark::DoNotOptimize(table.value(n, n / 2));
    }
}
BENCHMARK(BM_bell_table_lambda)->Arg(40)->Arg(80);

void BM_euler_power_series(benchmark::State& state) {
    const std::size_t r = static_cast<std::size_t>(state.range(0));
    const std::size_t degree = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bellpart::euler_power_series(r, degree));
    }
}
BENCHMARK(BM_euler_power_series)->Args({4, 100})->Args({8, 100})->Args({8, 400});

}  // namespace

BENCHMARK_MAIN();
