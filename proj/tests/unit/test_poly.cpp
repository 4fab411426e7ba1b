#include <doctest.h>

#include <random>

#include "hyproots/poly.hpp"

using namespace hyproots;

namespace {

Poly random_poly(const PrimeField& F, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, F.p() - 1);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = pick(rng);
    c.back() = 1 + pick(rng) % (F.p() - 1);
    return Poly(F, std::move(c));
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("product, gcd and divrem examples") {
    PrimeField F(7);
    Poly f = Poly::of_ints(F, {1, 1});   // x+1
    Poly g = Poly::of_ints(F, {-1, 1});  // x-1
    CHECK(f * g == Poly::of_ints(F, {6, 0, 1}));  // x^2 + 6

    Poly a = Poly::of_ints(F, {-1, 0, 1});  // x^2-1
    CHECK(poly_gcd(a, g) == g.monic());

    auto [q, r] = Poly::of_ints(F, {0, 0, 0, 1}).divrem(Poly::of_ints(F, {0, 0, 1}));
    CHECK(q == Poly::x(F));
    CHECK(r.is_zero());
}

TEST_CASE("ring properties on random polynomials") {
    PrimeField F(101);
    std::mt19937 rng(11);
    for (int it = 0; it < 25; ++it) {
        Poly f = random_poly(F, 1 + it % 8, rng);
        Poly g = random_poly(F, 1 + (it * 3) % 9, rng);
        Poly h = random_poly(F, 1 + (it * 7) % 5, rng);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g).degree() == f.degree() + g.degree());
        auto [q, r] = f.divrem(g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("divide by zero polynomial throws") {
    PrimeField F(7);
    CHECK_THROWS(Poly::x(F).divrem(Poly::zero(F)));
}

TEST_CASE("powmod examples") {
    PrimeField F(7);
    // x^p mod (x^2 - a) = a^{(p-1)/2} x: p=7, a=2 gives x
    Poly mod = Poly::of_ints(F, {-2, 0, 1});
    CHECK(poly_powmod(Poly::x(F), 7, mod) == Poly::x(F));
    Poly f = Poly::of_ints(F, {3, 1, 4, 1});
    CHECK(poly_powmod(Poly::x(F), 1, f) == Poly::x(F));
}

TEST_CASE("hasse polynomial divides x^((p^2-1)/8) - 1 at p=7") {
    PrimeField F(7);
    Poly H = Poly::of_ints(F, {1, 2, 2, 1});
    const std::uint64_t e = (7ull * 7 - 1) / 8;
    Poly r = poly_powmod(Poly::x(F), e, H) - Poly::constant(F, 1);
    CHECK(r.divrem(H).second.is_zero());
    CHECK(r.is_zero());  // x^6 = 1 mod H already
}

TEST_CASE("hasse roots are eighth powers iff p = +-1 mod 8, fourth powers always") {
    for (std::uint32_t p = 5; p <= 61; p = next_prime(p)) {
        PrimeField F(p);
        const std::uint32_t D = F.half_degree();
        std::vector<std::uint32_t> c(D + 1);
        c[0] = 1;
        for (std::uint32_t n = 0; n < D; ++n)  // binom(D,n)^2 recurrence
            c[n + 1] = F.mul(c[n], F.mul(F.of_fraction(static_cast<std::int64_t>(D) - n, n + 1),
                                         F.of_fraction(static_cast<std::int64_t>(D) - n, n + 1)));
        Poly H(F, std::move(c));
        const std::uint64_t e = static_cast<std::uint64_t>(p) * p - 1;
        auto divides = [&](std::uint64_t expo) {
            Poly r = poly_powmod(Poly::x(F), expo, H) - Poly::constant(F, 1);
            return r.divrem(H).second.is_zero();
        };
        INFO("p=", p);
        CHECK(divides(e / 4));
        CHECK(divides(e / 8) == (p % 8 == 1 || p % 8 == 7));
    }
}

TEST_CASE("eval: hasse polynomial roots at p=7") {
    PrimeField F(7);
    Poly H = Poly::of_ints(F, {1, 2, 2, 1});
    int zeros = 0;
    for (std::uint32_t x = 0; x < 7; ++x)
        if (H.eval(x) == 0) ++zeros;
    CHECK(zeros == 3);  // 3 h(-7) with h(-7) = 1
    CHECK(H.eval(0) == 1);
    CHECK(Poly::constant(F, 5).eval(3) == 5);
}

TEST_CASE("squarefree multiplicities: constructed inputs") {
    PrimeField F(101);
    Poly f = Poly::of_ints(F, {1, 1}).pow(12) * Poly::x(F);
    auto parts = squarefree_multiplicities(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 1);
    CHECK(parts[0].first == Poly::x(F));
    CHECK(parts[1].second == 12);
    CHECK(parts[1].first == Poly::of_ints(F, {1, 1}));
    CHECK(has_twelfth_power_factor(f));

    PrimeField F7(7);
    Poly g = Poly::of_ints(F7, {3, 1, 1});  // x^2+x+3, squarefree
    CHECK(poly_gcd(g, g.derivative()).degree() == 0);
    auto sf = squarefree_multiplicities(g);
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].second == 1);

    Poly xp = Poly::x(F7).pow(7);
    auto pp = squarefree_multiplicities(xp);
    REQUIRE(pp.size() == 1);
    CHECK(pp[0].first == Poly::x(F7));
    CHECK(pp[0].second == 7);
}

TEST_CASE("squarefree decomposition reconstructs the product") {
    PrimeField F(13);
    std::mt19937 rng(5);
    for (int it = 0; it < 15; ++it) {
        Poly f = random_poly(F, 2, rng) * random_poly(F, 1, rng).pow(2 + it % 3);
        auto parts = squarefree_multiplicities(f);
        Poly prod = Poly::constant(F, f.leading());
        for (const auto& [a, m] : parts) prod = prod * a.pow(static_cast<std::uint64_t>(m));
        CHECK(prod == f.monic().scaled(f.leading()));
    }
}

TEST_CASE("compose and reversal") {
    PrimeField F(11);
    Poly f = Poly::of_ints(F, {1, 2, 3});
    Poly inner = Poly::of_ints(F, {0, 4, -4});
    Poly comp = f.compose(inner);
    for (std::uint32_t x = 0; x < 11; ++x) CHECK(comp.eval(x) == f.eval(inner.eval(x)));
    Poly rev = f.reversed(4);  // y^4 f(1/y)
    CHECK(rev == Poly::of_ints(F, {0, 0, 3, 2, 1}));
}

}  // TEST_SUITE
