// Kummer 1F1 truncations with the upper parameter in F_q = F_{p^m}, the x^k
// change of variable that keeps the differential equation's coefficient
// degrees bounded, the residual check for that equation, and root counting
// over the prime field.

#ifndef HYPROOTS_KUMMER_HPP
#define HYPROOTS_KUMMER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hyproots/fqpoly.hpp"
#include "hyproots/hyptrunc.hpp"

namespace hyproots {

struct KummerSpec {
    const ExtField* K = nullptr;
    FqElem alpha;                       // upper parameter
    std::optional<Rational> beta_rat;   // lower parameter, rational form
    std::optional<FqElem> beta_ext;     // or an extension element

    KummerSpec(const ExtField& field, FqElem a, Rational b)
        : K(&field), alpha(std::move(a)), beta_rat(b) {}
    KummerSpec(const ExtField& field, FqElem a, FqElem b)
        : K(&field), alpha(std::move(a)), beta_ext(std::move(b)) {}
};

struct KummerTruncation {
    FqPoly eta;               // K^(p)(x^k): coefficients at exponents k*n
    std::uint64_t n_star = 0; // truncation index of K^(p)
    std::uint32_t k = 1;      // substitution exponent
    std::uint32_t omega = 1;  // N* = (omega p - a)/b
    std::uint32_t a = 1;
    std::uint32_t b = 1;
};

// Truncation index = last n before a Pochhammer factor of alpha, beta or n!
// vanishes; k = b of the binding constraint (1 when the n! bound p-1 binds).
// The rational-beta mode requires alpha outside F_p; with beta in F_q the
// k = 1 mode additionally requires alpha - beta outside F_p.
KummerTruncation kummer_truncate(const KummerSpec& spec);

// residual of (x/b) y'' + [(beta - x^b) - (b-1)/b] y' - b x^{b-1} alpha y
// reduced mod x^{p-a-1}; identically zero for every valid truncation
FqPoly de_residual(const KummerSpec& spec, const KummerTruncation& t);

struct RootCountReport {
    std::uint64_t count = 0;      // roots of eta in F_p
    std::uint64_t degree = 0;
    double p_to_6_7 = 0.0;        // p^{6/7}
    double ratio = 0.0;           // count / p^{6/7}
};

RootCountReport kummer_root_count(const KummerSpec& spec, const KummerTruncation& t,
                                  unsigned threads = 0);

// Stepanov-style parameter calculator (documentation only; the auxiliary
// polynomial itself is never constructed): A = d*floor(p^{2/7}),
// B = C = d*floor(p^{1/7}), D = d^3*floor(p^{2/7}), bound = (A+(p-1)B+pC)/D.
struct StepanovParams {
    double A = 0, B = 0, C = 0, D = 0, bound = 0;
};
StepanovParams stepanov_parameters(std::uint64_t p, double delta = 1.0);

}  // namespace hyproots

#endif
