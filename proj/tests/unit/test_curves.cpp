#include <doctest.h>

#include <cmath>

#include "hyproots/curves.hpp"

using namespace hyproots;

TEST_SUITE("curves") {

TEST_CASE("character sum S(a,b) examples at p=7") {
    PrimeField F(7);
    CHECK(char_sum_S(6, 3, F) == 6);                 // S(2D, D) = -1
    CHECK(char_sum_S(4, 3, F) == 4);                 // -C(3,2) = -3
    CHECK(char_sum_S(1, 1, F) == 0);                 // C(1,5) = 0
    CHECK(char_sum_S_binomial(6, 3, F) == 6);
    CHECK(char_sum_S_binomial(4, 3, F) == 4);
    CHECK(char_sum_S_binomial(1, 1, F) == 0);
}

TEST_CASE("binomial shortcut agrees with the direct sum") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        PrimeField F(p);
        for (std::uint64_t a = 1; a < 2 * p - 2; ++a)
            for (std::uint64_t b = 0; b < p; ++b)
                CHECK(char_sum_S_binomial(a, b, F) == char_sum_S(a, b, F));
    }
}

TEST_CASE("curve counts against brute force for p <= 31") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        PrimeField F(p);
        QuadCharTable chi(F);
        for (Family fam : {Family::legendre2, Family::b3, Family::b4, Family::b6,
                           Family::e_lambda}) {
            for (std::uint32_t lam = 0; lam < p; ++lam) {
                CurveCount cc = count_curve(fam, lam, chi);
                if (cc.singular) continue;
                CHECK(cc.trace == brute_force_trace(fam, lam, F));
                CHECK(F.of_int(cc.trace) == cc.char_sum);
                CHECK(std::abs(static_cast<double>(cc.trace)) <= 2.0 * std::sqrt(p));
            }
        }
    }
}

TEST_CASE("character table counting equals literal [f]^D powering") {
    // slow route: sum_x f(x)^D by explicit exponentiation
    for (std::uint32_t p : {7u, 13u, 31u}) {
        PrimeField F(p);
        QuadCharTable chi(F);
        for (Family fam : {Family::legendre2, Family::b4, Family::b6}) {
            for (std::uint32_t lam = 0; lam < p; ++lam) {
                Poly f = family_cubic(fam, lam, F);
                std::uint32_t powered = 0;
                for (std::uint32_t x = 0; x < p; ++x)
                    powered = F.add(powered, F.pow(f.eval(x), F.half_degree()));
                CHECK(count_curve(fam, lam, chi).char_sum == powered);
            }
        }
    }
}

TEST_CASE("supersingular lambdas match hasse roots at p=7") {
    PrimeField F(7);
    QuadCharTable chi(F);
    int supersingular = 0;
    for (std::uint32_t lam = 0; lam < 7; ++lam) {
        CurveCount cc = count_curve(Family::legendre2, lam, chi);
        if (!cc.singular && cc.trace == 0) ++supersingular;
    }
    CHECK(supersingular == 3);  // 3 h(-7)
}

TEST_CASE("correspondence between truncations and char sums") {
    for (std::uint32_t p : {7u, 11u, 13u, 17u, 19u, 23u}) {
        PrimeField F(p);
        for (Family fam : {Family::legendre2, Family::b3, Family::b4, Family::b6,
                           Family::e_lambda}) {
            CorrespondenceReport rep = hyp_curve_correspondence(fam, F);
            INFO("family ", family_name(fam), " p=", p);
            CHECK(rep.ok());
            CHECK(rep.checked > 0);
        }
    }
}

TEST_CASE("K3 double sum agrees with coefficient polynomial") {
    for (std::uint32_t p : {7u, 11u, 13u, 17u}) {
        PrimeField F(p);
        QuadCharTable chi(F);
        for (int b : {2, 3, 4, 6}) {
            for (std::uint32_t lam = 1; lam < p; ++lam) {
                INFO("b=", b, " p=", p, " lambda=", lam);
                CHECK(count_k3(b, lam, chi, K3Mode::double_sum) ==
                      count_k3(b, lam, chi, K3Mode::coeff_poly));
            }
        }
    }
    CHECK_THROWS_WITH(count_k3(2, 0, QuadCharTable(PrimeField(7)), K3Mode::coeff_poly),
                      doctest::Contains("ExcludedLambda"));
}

TEST_CASE("clausen curve identity") {
    for (std::uint32_t p : {7u, 11u, 13u, 29u}) {
        ClausenCurveReport rep = clausen_curve_check(QuadCharTable(PrimeField(p)));
        CHECK(rep.ok());
        CHECK(rep.checked == p - 2);  // lambda != 0, -1
    }
}

TEST_CASE("k3 criterion at p=101") {
    PrimeField F(101);
    for (int b : {3, 4, 6}) {
        for (std::uint32_t lam : {1u, 5u, 7u, 42u}) {
            K3Verdict v = k3_criterion(b, lam, F);
            INFO("b=", b, " lambda=", lam);
            CHECK(v.nonconstant_delta);
            CHECK(v.degree_bound);
            CHECK(v.no_twelfth_power);
            CHECK(v.delta_matches_expected);
            CHECK(v.delta == v.g2 * v.g2 * v.g2 - (v.g3 * v.g3).scaled(27));
        }
        // excluded lambda reports condition failures
        K3Verdict z = k3_conditions(b, 0, F);
        CHECK_FALSE(z.nonconstant_delta);
        CHECK_FALSE(z.no_twelfth_power);
        CHECK_THROWS_WITH(k3_criterion(b, 0, F), doctest::Contains("ExcludedLambda"));
    }
}

TEST_CASE("k3 discriminant factored forms") {
    PrimeField F(101);
    // b=4, lambda=5: 16 l^2 y^8 (y+1)^2 (y^2+y-l)^2
    K3Verdict v = k3_criterion(4, 5, F);
    CHECK(v.delta == k3_expected_discriminant(4, 5, F));
    // b=6, lambda=7: 16 l^2 y^9 (y^3+2y^2+y-4l)
    K3Verdict w = k3_criterion(6, 7, F);
    CHECK(w.delta == k3_expected_discriminant(6, 7, F));
}

TEST_CASE("short weierstrass isomorphism is an equivalence relation") {
    PrimeField F(13);
    // quadratic twist by a nonsquare shares j but is not isomorphic (A,B != 0)
    // E: y^2 = x^3 + x + 1; twist by u with chi(u) = -1: A' = u^2 A, B' = u^3 B
    std::uint32_t u = 2;  // 2 is a nonsquare mod 13
    REQUIRE(F.legendre(u) == -1);
    CHECK_FALSE(short_weierstrass_isomorphic(F, 1, 1, F.mul(u, u), F.mul(F.mul(u, u), u)));
    // scaling by a square is isomorphic
    std::uint32_t s = 4;
    CHECK(short_weierstrass_isomorphic(F, 1, 1, F.mul(s, s), F.mul(F.mul(s, s), s)));
    CHECK(short_weierstrass_isomorphic(F, 1, 1, 1, 1));
}

TEST_CASE("isomorphism class multiplicities at p=13") {
    PrimeField F(13);
    auto b6 = iso_class_multiplicity(Family::b6, F);
    CHECK(b6.max_multiplicity <= 2);
    // pairing lambda2 = -4/27 - lambda1 realizes size 2
    if (b6.max_multiplicity == 2) {
        const std::uint32_t c = F.neg(F.of_fraction(4, 27));
        for (const auto& grp : b6.witness_groups) {
            REQUIRE(grp.size() == 2);
            CHECK(F.add(grp[0], grp[1]) == c);
        }
    }
    CHECK(iso_class_multiplicity(Family::b4, F).max_multiplicity <= 3);
    CHECK(iso_class_multiplicity(Family::legendre2, F).max_multiplicity <= 6);
    CHECK(iso_class_multiplicity(Family::b3, F).max_multiplicity <= 13);
    CHECK(iso_class_multiplicity(Family::e_lambda, F).max_multiplicity <= 3);
}

TEST_CASE("multiplicity bounds over a prime range") {
    for (std::uint32_t p = 5; p <= 61; p = next_prime(p)) {
        PrimeField F(p);
        for (Family fam : {Family::legendre2, Family::b3, Family::b4, Family::b6,
                           Family::e_lambda}) {
            auto rep = iso_class_multiplicity(fam, F);
            INFO("family ", family_name(fam), " p=", p, " mult=", rep.max_multiplicity);
            CHECK(rep.max_multiplicity <= family_class_bound(fam));
        }
    }
}

}  // TEST_SUITE
