#include "resonance/closed_forms.hpp"
#include "resonance/koszul.hpp"

#include <benchmark/benchmark.h>

using namespace resonance;

namespace {

void BM_SurfaceHilbert(benchmark::State& state) {
    const PairSpec spec = surface_spec(static_cast<std::size_t>(state.range(0)));
    const auto q_max = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_table(spec, q_max).rows.size());
}

void BM_SurfaceHilbertExact(benchmark::State& state) {
    const PairSpec spec = surface_spec(static_cast<std::size_t>(state.range(0)));
    EngineOptions opts;
    opts.mode = RankMode::Exact;
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_table(spec, 3, opts).rows.size());
}

}  // namespace

BENCHMARK(BM_SurfaceHilbert)->Args({2, 5})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceHilbertExact)->Arg(3)->Unit(benchmark::kMillisecond);
