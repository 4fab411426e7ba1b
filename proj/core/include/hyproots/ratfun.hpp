// Truncations of rational functions F = c A(x)/B(x) regular at 0, and the
// classification of their mod-p value distribution: a bounded number of
// solutions per class except for at most one exceptional class.

#ifndef HYPROOTS_RATFUN_HPP
#define HYPROOTS_RATFUN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyproots/poly.hpp"

namespace hyproots {

struct RationalFun {
    std::vector<std::int64_t> A;  // exact integer coefficients, index = exponent
    std::vector<std::int64_t> B;  // B[0] != 0 (regular at 0)
    std::int64_t c_num = 1;
    std::int64_t c_den = 1;

    RationalFun(std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                std::int64_t cn = 1, std::int64_t cd = 1);
    std::string str() const;
};

struct RatTruncation {
    Poly poly;            // F_p(x) = sum_{n<=p-k} f_n x^n
    std::uint32_t k = 1;
    Poly q_star;          // Q*_p with B F_p - cA = x^{p-k+1} Q*_p
};

// Maclaurin coefficients by the linear recurrence from B*F = cA reduced mod p.
// Preconditions checked: p does not divide B[0] or c_den (the only
// denominators the recurrence introduces), and f_{p-k} != 0 (else "BadK").
RatTruncation truncate_rational(const RationalFun& f, const PrimeField& F, std::uint32_t k);

// scans k = 1..k_max for the first admissible truncation
RatTruncation truncate_rational_auto(const RationalFun& f, const PrimeField& F,
                                     std::uint32_t k_max = 8);

struct ValueClassification {
    std::optional<std::uint32_t> exceptional_m0;
    int bounded_bound = 0;                  // max deg R_{p,m} over non-exceptional m
    std::vector<std::uint32_t> value_counts;  // #{x : F_p(x) = m} for every m
    bool counts_within_bound = false;       // every non-exceptional count <= #roots(R_{p,m})
};

// decides the exceptional class via R_{p,m} = x^{k-1}(B m - cA) - x Q*_p and
// cross-checks against exhaustive evaluation
ValueClassification classify_values(const RationalFun& f, const PrimeField& F, std::uint32_t k);

struct AlgebraicExampleReport {
    std::uint32_t p = 0;
    bool identity_holds = false;    // 2F1(u/2v,(u+v)/2v;1/2;x^2) = [(1-x)^{2E}+(1+x)^{2E}]/2
    std::uint64_t degree = 0;       // E
    std::vector<std::uint32_t> attained;  // distinct attained values of F(x^2)
    // Root checks for (u,v) = (2,3) against G(m) = (4m^3-1)^3 - 27m^3
    // = (m^3-1)(8m^3+1)^2. The value at x = +-1 is the fixed class 2^{2E-1},
    // which need not be a root of G (p = 13 is the first counterexample), so
    // the strict all-attained check can fail while the interior one holds.
    bool attained_are_roots = false;           // strict: every attained m has G(m) = 0
    bool interior_attained_are_roots = false;  // attained by some x != +-1
    std::uint32_t boundary_value = 0;          // 2^{2E-1} mod p, the class of x = +-1
    bool attained_bounded = false;             // |attained| <= 7
};

// (u,v) coprime, 0 < u/v <= 1, p = 1 mod 2v; the root-polynomial check runs
// only for (u,v) = (2,3)
AlgebraicExampleReport algebraic_example_check(std::uint32_t u, std::uint32_t v,
                                               const PrimeField& F);

}  // namespace hyproots

#endif
