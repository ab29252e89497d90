#include <benchmark/benchmark.h>

#include "mulli/mulli.hpp"

using namespace mulli;

namespace {

const Partition kLambda{21, 17, 14, 12, 9, 9, 6, 4, 3, 3, 1};

void BM_ComputeSymbol(benchmark::State& state) {
    const Modulus p(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_symbol(kLambda, p));
}
BENCHMARK(BM_ComputeSymbol)->Arg(3)->Arg(5)->Arg(7);

void BM_MullineuxMap(benchmark::State& state) {
    const Modulus p(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mullineux_map(kLambda, p));
}
BENCHMARK(BM_MullineuxMap)->Arg(3)->Arg(5)->Arg(7);

void BM_MullineuxToBg(benchmark::State& state) {
    const Modulus p(5);
    const Partition mu = bg_to_mullineux(self_conjugate_from_hooks({29, 23, 17, 13, 9, 7, 3, 1}), p);
    for (auto _ : state) benchmark::DoNotOptimize(mullineux_to_bg(mu, p));
}
BENCHMARK(BM_MullineuxToBg);

void BM_Census(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(Modulus(3), n));
}
BENCHMARK(BM_Census)->Arg(15)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
