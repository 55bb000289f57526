#include "resonance/sparse.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace resonance;

namespace {

SparseMatrix random_sparse(std::size_t rows, std::size_t cols, std::size_t per_col, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> value(-3, 3);
    SparseMatrix m(rows, cols);
    ColumnBuilder b;
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t k = 0; k < per_col; ++k) b.add(static_cast<std::uint32_t>(rng() % rows), BigInt(value(rng)));
        m.set_column(c, b.finish());
    }
    return m;
}

void BM_RankModular(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SparseMatrix m = random_sparse(n, n, 6, 7);
    for (auto _ : state) benchmark::DoNotOptimize(certified_rank(m, RankMode::Modular).rank);
}

void BM_RankExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SparseMatrix m = random_sparse(n, n, 6, 7);
    for (auto _ : state) benchmark::DoNotOptimize(certified_rank(m, RankMode::Exact).rank);
}

}  // namespace

BENCHMARK(BM_RankModular)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankExact)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
