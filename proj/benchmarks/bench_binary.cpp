#include <benchmark/benchmark.h>

#include "xrank/binary.hpp"
#include "xrank/rng.hpp"

using namespace xrank;

namespace {

BinaryForm random_form(int d, Rng& rng) {
    std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
    for (auto& c : coeffs) c = rational_from_double(rng.normal());
    return BinaryForm(d, std::move(coeffs));
}

}  // namespace

static void BM_ComplexRank(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(7);
    for (auto _ : state) {
        const BinaryForm f = random_form(d, rng);
        benchmark::DoNotOptimize(complex_rank(f).rank);
    }
}
BENCHMARK(BM_ComplexRank)->Arg(4)->Arg(6)->Arg(8);

static void BM_RealRank(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(11);
    for (auto _ : state) {
        const BinaryForm f = random_form(d, rng);
        benchmark::DoNotOptimize(real_rank(f).rank);
    }
}
BENCHMARK(BM_RealRank)->Arg(4)->Arg(6)->Arg(8);

static void BM_SylvesterDecompose(benchmark::State& state) {
    Rng rng(13);
    for (auto _ : state) {
        const BinaryForm f = random_form(6, rng);
        const RankCertificate cert = complex_rank(f);
        benchmark::DoNotOptimize(sylvester_decompose(cert, f).numeric.terms.size());
    }
}
BENCHMARK(BM_SylvesterDecompose)->Unit(benchmark::kMillisecond);
