#include <benchmark/benchmark.h>

#include "xrank/decompose.hpp"
#include "xrank/rng.hpp"

using namespace xrank;

namespace {

AmbientPoint random_target(const VarietySpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    AmbientPoint p;
    p.spec = spec;
    p.field = Field::Complex;
    p.re.resize(spec.ambient_affine_dim());
    p.im.resize(spec.ambient_affine_dim());
    for (Eigen::Index i = 0; i < p.re.size(); ++i) {
        p.re[i] = rng.normal();
        p.im[i] = rng.normal();
    }
    return p;
}

}  // namespace

static void BM_FitRankVeronese34(benchmark::State& state) {
    const auto spec = VarietySpec::veronese(3, 4);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        FitOptions opts;
        opts.seed = seed;
        const AmbientPoint target = random_target(spec, seed++);
        auto fit = fit_rank(spec, target, 6, Field::Complex, opts);
        benchmark::DoNotOptimize(fit.relative_residual);
    }
}
BENCHMARK(BM_FitRankVeronese34)->Unit(benchmark::kMillisecond);

static void BM_SplitComplexSegre333(benchmark::State& state) {
    const auto spec = VarietySpec::segre({3, 3, 3});
    std::uint64_t seed = 100;
    for (auto _ : state) {
        FitOptions opts;
        opts.seed = seed;
        const AmbientPoint target = random_target(spec, seed++);
        auto report = two_point_split_complex(spec, target, opts, 5);
        benchmark::DoNotOptimize(report.length);
    }
}
BENCHMARK(BM_SplitComplexSegre333)->Unit(benchmark::kMillisecond);
