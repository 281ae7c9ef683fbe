#include "ramanujan/ramanujan.hpp"

#include <benchmark/benchmark.h>

using namespace ramanujan;

static void BM_StableG(benchmark::State& state) {
    const double w = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(stable_G(2, w));
}
BENCHMARK(BM_StableG)->Arg(1)->Arg(20)->Arg(30)->Arg(200);

static void BM_HurwitzZeta(benchmark::State& state) {
    const cplx a = state.range(0) ? cplx(0.0, 3.0) : cplx(0.7, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(cplx(3.5, 1.0), a));
}
BENCHMARK(BM_HurwitzZeta)->Arg(0)->Arg(1);

static void BM_PVIntegral(benchmark::State& state) {
    const PVIntegralSpec spec{PVKernel::ShiftedCot, 3.5, static_cast<double>(state.range(0)), 0.25};
    for (auto _ : state) benchmark::DoNotOptimize(pv_integral(spec).value);
}
BENCHMARK(BM_PVIntegral)->Arg(1)->Arg(6)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_RaabeDirect(benchmark::State& state) {
    const RaabeParams p{0.7, static_cast<double>(state.range(0)), 1.5};
    for (auto _ : state) benchmark::DoNotOptimize(raabe_direct(p).value);
}
BENCHMARK(BM_RaabeDirect)->Arg(1)->Arg(10)->Unit(benchmark::kMicrosecond);

static void BM_LambertShifted(benchmark::State& state) {
    const LambertParams p{3.5, 1.0 / static_cast<double>(state.range(0)), 0.25};
    for (auto _ : state) benchmark::DoNotOptimize(lambert_shifted(p).value);
}
BENCHMARK(BM_LambertShifted)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
