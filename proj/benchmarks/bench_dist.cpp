#include <benchmark/benchmark.h>

#include "hyproots/dist.hpp"
#include "hyproots/hyptrunc.hpp"

using namespace hyproots;

// full-field Horner sweep; counters report modular mul-adds per second
static void BM_Distribution(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    const auto threads = static_cast<unsigned>(state.range(1));
    PrimeField F(p);
    Poly f = truncate(parse_hyp_spec("2F1(1/2,1/2;1)"), F).poly;
    for (auto _ : state) {
        RootDistribution d = distribution(f, Substitution{}, threads);
        benchmark::DoNotOptimize(d.counts.data());
    }
    state.counters["muladds/s"] = benchmark::Counter(
        static_cast<double>(state.iterations()) * p * (f.degree() + 1),
        benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Distribution)
    ->Args({10007, 1})
    ->Args({10007, 2})
    ->Args({104729, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_TruncateCoefficients(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    PrimeField F(p);
    const HypSpec spec = parse_hyp_spec("3F2(1/2,1/2,1/2;1,1)");
    for (auto _ : state) {
        TruncatedPoly t = truncate(spec, F);
        benchmark::DoNotOptimize(t.poly.coeffs().data());
    }
}
BENCHMARK(BM_TruncateCoefficients)->Arg(10007)->Arg(104729)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
