#include <doctest.h>

#include <cmath>

#include "hyproots/hyptrunc.hpp"

using namespace hyproots;

TEST_SUITE("hyptrunc") {

TEST_CASE("spec parsing round trips and rejects junk") {
    HypSpec s = parse_hyp_spec("2F1(1/2,1/2;1)");
    CHECK(s.upper.size() == 2);
    CHECK(s.lower.size() == 1);
    CHECK(s.str() == "2F1(1/2,1/2;1)");

    HypSpec t = parse_hyp_spec("3F2(1/6,5/6,1/2;1,1)");
    CHECK(t.upper.size() == 3);
    CHECK(t.str() == "3F2(1/6,5/6,1/2;1,1)");

    CHECK_THROWS_WITH(parse_hyp_spec("2F1(2/4,1/2;1)"), doctest::Contains("NonReduced"));
    CHECK_THROWS(parse_hyp_spec("2F1(1/2,1/2)"));
    CHECK_THROWS(parse_hyp_spec("2F2(1/2,1/2;1,1)"));
    CHECK_THROWS(parse_hyp_spec("2F1(3/2,1/2;1)"));  // out of (0,1]
    CHECK_THROWS(parse_hyp_spec("junk"));
    CHECK(parse_hyp_spec("1F0(1/3)").lower.empty());
}

TEST_CASE("pochhammer examples at p=7") {
    PrimeField F(7);
    CHECK(pochhammer(Rational(1, 2), 0, F) == 1);
    // (1/2)_3 = 15/8 = 1 mod 7
    CHECK(pochhammer(Rational(1, 2), 3, F) == 1);
    // first vanishing index D+1 for 1/2
    CHECK(pochhammer(Rational(1, 2), 3, F) != 0);
    CHECK(pochhammer(Rational(1, 2), 4, F) == 0);
    CHECK_THROWS_WITH(pochhammer(Rational(1, 7), 2, F), doctest::Contains("BadPrime"));
}

TEST_CASE("truncation degrees from the rule") {
    HypSpec hasse = parse_hyp_spec("2F1(1/2,1/2;1)");
    CHECK(truncation_degree(hasse, PrimeField(7)).N == 3);

    HypSpec s = parse_hyp_spec("2F1(1/3,5/6;1/2)");
    CHECK(truncation_degree(s, PrimeField(7)).N == 2);    // (p-1)/3 at p=1 mod 6
    CHECK(truncation_degree(s, PrimeField(11)).N == 1);   // (p-5)/6 at p=5 mod 6
}

TEST_CASE("truncation report carries the minimizing parameter") {
    HypSpec s = parse_hyp_spec("2F1(1/3,5/6;1/2)");
    PrimeField F(11);
    TruncationReport rep = truncation_degree(s, F);
    CHECK(rep.N == 1);
    CHECK_FALSE(rep.factorial_bound);
    CHECK(rep.bounds[rep.min_index].param == Rational(5, 6));
    // omega p - a over b reproduces n for every row
    for (const auto& b : rep.bounds)
        CHECK(b.n == (static_cast<std::uint64_t>(b.omega) * 11 - b.param.num) / b.param.den);
}

TEST_CASE("hasse truncation coefficients at p=7") {
    PrimeField F(7);
    TruncatedPoly t = truncate(parse_hyp_spec("2F1(1/2,1/2;1)"), F);
    CHECK(t.poly == Poly::of_ints(F, {1, 2, 2, 1}));  // binom(3,n)^2 mod 7
}

TEST_CASE("coefficients agree with exact rational series") {
    HypSpec s = parse_hyp_spec("2F1(1/3,2/3;1)");
    PrimeField F(7);
    TruncatedPoly t = truncate(s, F);
    CHECK(t.report.N == 2);
    for (unsigned n = 0; n <= 2; ++n) {
        mpq_class c = exact_series_coefficient(s, n);
        // reduce mod 7
        mpz_class num = c.get_num() % 7, den = c.get_den() % 7;
        std::uint32_t nv = F.of_int(num.get_si());
        std::uint32_t dv = F.of_int(den.get_si());
        CHECK(t.poly.coeff(n) == F.mul(nv, F.inv(dv)));
    }
    CHECK(t.poly.coeff(0) == 1);
}

TEST_CASE("truncation is maximal: the minimizing pochhammer vanishes next") {
    for (const char* str : {"2F1(1/2,1/2;1)", "2F1(1/3,5/6;1/2)", "3F2(1/2,1/2,1/2;1,1)",
                            "2F1(1/4,3/4;1)", "2F1(1/6,5/6;1)"}) {
        HypSpec s = parse_hyp_spec(str);
        for (std::uint32_t p : {7u, 11u, 13u, 17u, 19u, 23u, 97u}) {
            PrimeField F(p);
            TruncationReport rep = truncation_degree(s, F);
            CHECK(truncate(s, F).poly.degree() == static_cast<int>(rep.N));
            if (!rep.factorial_bound) {
                const Rational& r = rep.bounds[rep.min_index].param;
                CHECK(pochhammer(r, rep.N, F) != 0);
                CHECK(pochhammer(r, rep.N + 1, F) == 0);
            } else {
                CHECK(rep.N == p - 1);
            }
            // N/p approaches omega/b: |N/p - omega/b| < 1/p
            if (!rep.factorial_bound) {
                const auto& mb = rep.bounds[rep.min_index];
                double lhs = static_cast<double>(rep.N) / p -
                             static_cast<double>(mb.omega) / mb.param.den;
                CHECK(std::abs(lhs) < 1.0 / p + 1e-12);
            }
        }
    }
}

TEST_CASE("binomial integrality property") {
    auto r = binomial_integrality_check(1, 2, 3);
    CHECK(r.integral);
    CHECK(r.value == 20);
    CHECK(binomial_integrality_check(1, 1, 5).value == 1);
    auto s = binomial_integrality_check(2, 6, 2);
    CHECK(s.integral);
    CHECK(s.value == 18);
    // exhaustive small range
    for (unsigned a = 1; a <= 12; ++a)
        for (unsigned b = 1; b <= 12; ++b)
            for (unsigned n = 1; n <= 40; ++n) CHECK(binomial_integrality_check(a, b, n).integral);
}

}  // TEST_SUITE
