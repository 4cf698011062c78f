#include <benchmark/benchmark.h>

#include "qrep/commutant.hpp"

using namespace qrep;

namespace {

// Arguments: level, genus, series index (0: D, 1: the exceptional algebra).
Algebra algebra_for(int level, int series) {
    auto cat = std::make_shared<const Category>(level);
    if (series == 0) return build_ade(cat, Series::D);
    return build_ade(cat, level == 10 ? Series::E6 : level == 16 ? Series::E7 : Series::E8);
}

void BM_PMatrixParallel(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0)), genus = static_cast<int>(state.range(1));
    for (auto _ : state) {
        // A fresh category per iteration so both kernels start from cold 6j caches.
        state.PauseTiming();
        Algebra a = algebra_for(level, static_cast<int>(state.range(2)));
        state.ResumeTiming();
        benchmark::DoNotOptimize(p_matrix(a, genus));
    }
}

void BM_PMatrixSerial(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0)), genus = static_cast<int>(state.range(1));
    for (auto _ : state) {
        state.PauseTiming();
        Algebra a = algebra_for(level, static_cast<int>(state.range(2)));
        state.ResumeTiming();
        benchmark::DoNotOptimize(p_matrix_serial(a, genus));
    }
}

}  // namespace

#define PG_ARGS ->Args({4, 2, 0})->Args({6, 2, 0})->Args({10, 1, 1})->Args({10, 2, 0})->Unit(benchmark::kMillisecond)
BENCHMARK(BM_PMatrixParallel) PG_ARGS;
BENCHMARK(BM_PMatrixSerial) PG_ARGS;

BENCHMARK_MAIN();
