#include <benchmark/benchmark.h>
#include <omp.h>

#include "lensspec/counting.hpp"
#include "lensspec/lattice.hpp"

using namespace lensspec;

namespace {

CongruenceLattice bench_lattice(int n) {
    std::vector<int> s{1, 2, 4, 5, 7};
    s.resize(static_cast<std::size_t>(n));
    return lattice_from_lens(11, s);
}

void BM_ShellTableSerial(benchmark::State& state) {
    auto lat = bench_lattice(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::shell_table(lat, static_cast<int>(state.range(1))));
}

void BM_ShellTableOmp(benchmark::State& state) {
    auto lat = bench_lattice(static_cast<int>(state.range(0)));
    omp_set_num_threads(static_cast<int>(state.range(2)));
    for (auto _ : state) benchmark::DoNotOptimize(shell_table(lat, static_cast<int>(state.range(1))));
}

void BM_ReducedSerial(benchmark::State& state) {
    auto lat = bench_lattice(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::reduced_counts(lat));
}

void BM_ReducedOmp(benchmark::State& state) {
    auto lat = bench_lattice(static_cast<int>(state.range(0)));
    omp_set_num_threads(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(reduced_counts(lat));
}

}  // namespace

BENCHMARK(BM_ShellTableSerial)->Args({3, 40})->Args({4, 25})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShellTableOmp)->Args({3, 40, 1})->Args({3, 40, 4})->Args({4, 25, 1})->Args({4, 25, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducedSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducedOmp)->Args({3, 1})->Args({3, 4})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
