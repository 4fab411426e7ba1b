#include <benchmark/benchmark.h>

#include <random>

#include "hyproots/field.hpp"

using namespace hyproots;

static void BM_MulDivide(benchmark::State& state) {
    PrimeField F(104729);
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::uint32_t> pick(1, F.p() - 1);
    std::uint32_t a = pick(rng), b = pick(rng);
    for (auto _ : state) {
        a = F.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_MulDivide);

static void BM_MulMontgomery(benchmark::State& state) {
    PrimeField F(104729);
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::uint32_t> pick(1, F.p() - 1);
    std::uint32_t a = F.to_mont(pick(rng)), b = F.to_mont(pick(rng));
    for (auto _ : state) {
        a = F.mont_mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_MulMontgomery);

static void BM_Inverse(benchmark::State& state) {
    PrimeField F(104729);
    std::uint32_t a = 12345;
    for (auto _ : state) {
        a = F.inv(a) + 1;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_Inverse);

static void BM_Legendre(benchmark::State& state) {
    PrimeField F(104729);
    std::uint32_t a = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(F.legendre(a));
        ++a;
    }
}
BENCHMARK(BM_Legendre);

BENCHMARK_MAIN();
