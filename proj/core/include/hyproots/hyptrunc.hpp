// Canonical mod-p truncations of hypergeometric series with rational
// parameters.
//
// For a parameter a/b (reduced, 0 < a/b <= 1) the Pochhammer product (a/b)_n
// first vanishes mod p at n = n_i + 1, where n_i = p - a when b = 1 and
// n_i = (u p - a)/b with u = least positive residue of a*p^{-1} mod b
// otherwise. The natural truncation degree is the minimum of the n_i over all
// upper and lower parameters together with the n! bound p - 1.

#ifndef HYPROOTS_HYPTRUNC_HPP
#define HYPROOTS_HYPTRUNC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hyproots/extfield.hpp"
#include "hyproots/poly.hpp"

namespace hyproots {

// reduced rational in (0, 1]
struct Rational {
    std::uint32_t num = 1;
    std::uint32_t den = 1;

    Rational() = default;
    Rational(std::uint32_t a, std::uint32_t b);  // validates gcd(a,b)=1, 1<=a<=b
    Rational complement() const { return Rational(den - num, den); }  // 1 - a/b (num<den)
    bool operator==(const Rational&) const = default;
    std::string str() const;
};

// dFd-1 with the implicit n! not listed among the lower parameters
struct HypSpec {
    std::vector<Rational> upper;  // length d >= 1
    std::vector<Rational> lower;  // length d-1

    std::string str() const;  // canonical "dFe(a1/b1,...;c1/d1,...)"
};

// grammar: dFe(a1/b1,...,ad/bd;c1/d1,...,ce/de) with e = d-1; "1" == "1/1".
// Throws std::invalid_argument with a position on malformed input, and with
// "NonReduced" when a fraction is not in lowest terms or outside (0, 1].
HypSpec parse_hyp_spec(std::string_view s);

struct ParamBound {
    Rational param;
    bool is_lower = false;   // appears in the denominator of the term ratio
    std::uint32_t omega = 1; // n = (omega*p - a)/b
    std::uint64_t n = 0;     // last index with nonvanishing Pochhammer
};

struct TruncationReport {
    std::uint64_t N = 0;               // truncation degree = min_i n_i, capped at p-1
    std::vector<ParamBound> bounds;    // one row per explicit parameter
    std::size_t min_index = 0;         // row attaining N (first), or npos when the
    bool factorial_bound = false;      // n! bound p-1 is the strict minimizer
};

// requires p odd and coprime to every a_i*b_i
TruncationReport truncation_degree(const HypSpec& spec, const PrimeField& F);

struct TruncatedPoly {
    Poly poly;
    TruncationReport report;
    HypSpec spec;
};

TruncatedPoly truncate(const HypSpec& spec, const PrimeField& F);

// (a)_n in the given field; for rationals requires p coprime to the
// denominator (else throws "BadPrime").
std::uint32_t pochhammer(const Rational& a, std::uint64_t n, const PrimeField& F);
std::uint32_t pochhammer(std::uint32_t a, std::uint64_t n, const PrimeField& F);
FqElem pochhammer(const FqElem& a, std::uint64_t n, const ExtField& K);

// (b^n / gcd(a,b)^{2n}) * prod_{j<n}(a + b j) / n! in exact rational
// arithmetic; integral() reports a denominator of 1.
struct IntegralityResult {
    bool integral = false;
    mpq_class value;
};
IntegralityResult binomial_integrality_check(unsigned a, unsigned b, unsigned n);

// exact rational coefficient of x^n in the (untruncated) series; used as a
// cross-check oracle at small indices
mpq_class exact_series_coefficient(const HypSpec& spec, unsigned n);

}  // namespace hyproots

#endif
