#include <benchmark/benchmark.h>

#include "xrank/dimension.hpp"

using namespace xrank;

static void BM_TerraciniExactVeronese34(benchmark::State& state) {
    const auto spec = VarietySpec::veronese(3, 4);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto est = terracini_dimension(spec, 5, 1, RankMode::ExactRational, seed++);
        benchmark::DoNotOptimize(est.observed_rank);
    }
}
BENCHMARK(BM_TerraciniExactVeronese34);

static void BM_TerraciniExactSegre333(benchmark::State& state) {
    const auto spec = VarietySpec::segre({3, 3, 3});
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto est = terracini_dimension(spec, 5, 1, RankMode::ExactRational, seed++);
        benchmark::DoNotOptimize(est.observed_rank);
    }
}
BENCHMARK(BM_TerraciniExactSegre333);

static void BM_TerraciniFloatVeronese46(benchmark::State& state) {
    const auto spec = VarietySpec::veronese(4, 6);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto est = terracini_dimension(spec, 21, 1, RankMode::FloatSVD, seed++);
        benchmark::DoNotOptimize(est.observed_rank);
    }
}
BENCHMARK(BM_TerraciniFloatVeronese46);

static void BM_GenericRankScanVeronese(benchmark::State& state) {
    const auto spec = VarietySpec::veronese(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        auto res = generic_rank_terracini(spec, 1);
        benchmark::DoNotOptimize(res.r_gen);
    }
}
BENCHMARK(BM_GenericRankScanVeronese)->Arg(2)->Arg(3)->Arg(4);
