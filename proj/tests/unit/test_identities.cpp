#include <doctest.h>

#include <numeric>

#include "hyproots/identities.hpp"

using namespace hyproots;

TEST_SUITE("identities") {

TEST_CASE("euler-pfaff examples") {
    PrimeField F7(7);
    auto v1 = verify_euler_pfaff(Rational(1, 3), F7);  // E = 2 < 7/2, case I
    CHECK(v1.holds);
    CHECK(v1.lhs_degree == 2);
    CHECK(v1.rhs_degree == 2);
    CHECK(v1.degrees_expected);

    auto v2 = verify_euler_pfaff(Rational(2, 3), F7);  // E = 4 > 7/2, case II
    CHECK(v2.holds);
}

TEST_CASE("euler square examples") {
    PrimeField F7(7);
    auto v = verify_euler_square(Rational(1, 3), F7);
    CHECK(v.holds);
    // rhs degree = 2D - E = 6 - 2 = 4
    CHECK(v.rhs_degree == 4);

    PrimeField F13(13);
    CHECK(verify_euler_square(Rational(1, 4), F13).holds);
}

TEST_CASE("clausen examples") {
    PrimeField F7(7);
    auto v2 = verify_clausen_k3(Rational(1, 2), F7);  // p=3 mod 4: (1-x) branch
    CHECK(v2.holds);
    auto v3 = verify_clausen_k3(Rational(1, 3), F7);  // 7 = 1 mod 6: squared branch
    CHECK(v3.holds);
}

TEST_CASE("quadratic examples") {
    CHECK(verify_quadratic(Rational(1, 4), PrimeField(17)).holds);  // 17 = 1 mod 8
    CHECK(verify_quadratic(Rational(1, 3), PrimeField(11)).holds);  // 11 = 5 mod 6: (1-2x)
    // x = 0 spot: both sides 1 is implied by holds + constant coefficient
}

TEST_CASE("quad_411 degree pairs") {
    PrimeField F7(7);
    auto v = verify_quad_411(3, F7);
    CHECK(v.holds);
    CHECK(v.degrees_expected);
    CHECK(v.lhs_degree == 2);  // E* = (p-1)/3

    PrimeField F5(5);
    auto w = verify_quad_411(4, F5);  // 5 = 5 mod 8: (E*, N**) = (1, 0)
    CHECK(w.holds);
    CHECK(w.lhs_degree == 1);

    CHECK(verify_quad_411(6, PrimeField(13)).holds);  // 13 = 1 mod 12
    CHECK_THROWS(verify_quad_411(5, F7));
}

TEST_CASE("symmetry a -> b-a") {
    for (std::uint32_t p : {7u, 11u, 13u, 17u, 19u}) {
        PrimeField F(p);
        for (std::uint32_t b : {3u, 4u, 6u}) {
            if (p <= b) continue;
            for (std::uint32_t a = 1; a < b; ++a) {
                if (std::gcd(a, b) != 1) continue;
                const Rational r(a, b), rc(b - a, b);
                CHECK(verify_euler_pfaff(r, F).holds == verify_euler_pfaff(rc, F).holds);
                CHECK(verify_clausen_k3(r, F).holds == verify_clausen_k3(rc, F).holds);
                CHECK(verify_quadratic(r, F).holds == verify_quadratic(rc, F).holds);
            }
        }
    }
}

TEST_CASE("every holding verdict has matching degrees") {
    SuiteResult res = run_identity_suite(5, 60, {3, 4, 6}, 2);
    CHECK(res.failures == 0);
    for (const auto& v : res.verdicts) {
        CHECK(v.holds);
        CHECK(v.lhs_degree == v.rhs_degree);
        CHECK_FALSE(v.first_mismatch.has_value());
    }
}

TEST_CASE("suite filters inadmissible b") {
    SuiteResult res = run_identity_suite(5, 20, {5}, 1);
    CHECK(res.verdicts.empty());
    REQUIRE(res.notes.size() == 1);
    CHECK(res.notes[0].find("unsupported b=5") != std::string::npos);
    CHECK(run_identity_suite(30, 20, {3}, 1).verdicts.empty());  // empty range
}

TEST_CASE("degree tables at sample primes") {
    // b=4, p=3 mod 8: N* = (p-3)/8; take p=11: 11 = 3 mod 8 -> 1
    {
        std::vector<DegreeCheck> cs = check_degree_tables(PrimeField(11));
        bool seen = false;
        for (const auto& c : cs) {
            CHECK(c.ok);
            if (c.table == "deg_inner_sq" && c.b == 4) {
                seen = true;
                CHECK(c.expected == 1);
            }
        }
        CHECK(seen);
    }
    for (std::uint32_t p : {13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 101u, 199u}) {
        for (const auto& c : check_degree_tables(PrimeField(p))) {
            INFO(c.table, " b=", c.b, " p=", c.p, " expected ", c.expected, " measured ",
                 c.measured);
            CHECK(c.ok);
        }
    }
}

}  // TEST_SUITE
