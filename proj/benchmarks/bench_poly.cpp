#include <benchmark/benchmark.h>

#include <random>

#include "hyproots/poly.hpp"

using namespace hyproots;

namespace {

Poly random_poly(const PrimeField& F, int deg, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.p() - 1);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = pick(rng);
    c.back() = 1;
    return Poly(F, std::move(c));
}

}  // namespace

static void BM_PolyMul(benchmark::State& state) {
    PrimeField F(104729);
    Poly f = random_poly(F, static_cast<int>(state.range(0)), 1);
    Poly g = random_poly(F, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize((f * g).degree());
}
BENCHMARK(BM_PolyMul)->Arg(128)->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);

static void BM_PolyGcd(benchmark::State& state) {
    PrimeField F(104729);
    Poly h = random_poly(F, 16, 3);
    Poly f = random_poly(F, static_cast<int>(state.range(0)), 4) * h;
    Poly g = random_poly(F, static_cast<int>(state.range(0)), 5) * h;
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(f, g).degree());
}
BENCHMARK(BM_PolyGcd)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

static void BM_PowmodHasse(benchmark::State& state) {
    // the divisibility-check workload: x^{(p^2-1)/8} mod H_p
    const auto p = static_cast<std::uint32_t>(state.range(0));
    PrimeField F(p);
    Poly H = random_poly(F, static_cast<int>((p - 1) / 2), 7);
    const std::uint64_t e = (static_cast<std::uint64_t>(p) * p - 1) / 8;
    for (auto _ : state) benchmark::DoNotOptimize(poly_powmod(Poly::x(F), e, H).degree());
}
BENCHMARK(BM_PowmodHasse)->Arg(199)->Arg(997)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
