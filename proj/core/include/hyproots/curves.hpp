// Character-sum toolkit for the elliptic families attached to the truncated
// 2F1's, the K3 counting functions, the Clausen curve identity, the K3
// criterion, and isomorphism-class multiplicities.
//
// Family templates (z^2 = f(x)):
//   legendre2 : x(x+1)(x+lambda)
//   b3        : x^3 + (x+lambda)^2
//   b4        : x(x(x+1)+lambda)
//   b6        : x^2(x+1)+lambda
//   e_lambda  : (x-1)(x^2 - 1/(lambda+1)),  lambda != 0,-1
//
// The correspondence between each family's character sum and the truncated
// 2F1 carries a sign and an argument scaling fixed here once and validated
// empirically by the suite:
//   2F1(1/2,1/2;1)^(p)(lambda)            = -sum_x chi(x(x+1)(x+lambda))
//   2F1(1/3,2/3;1)^(p)((27/4) lambda)     = -sum_x chi(x^3+(x+lambda)^2)   (lambda != 0)
//   2F1(1/4,3/4;1)^(p)(4 lambda)          = -sum_x chi(x(x(x+1)+lambda))
//   2F1(1/6,5/6;1)^(p)(-(27/4) lambda)    = -sum_x chi(x^2(x+1)+lambda)
// The b=4 and b=6 argument scalings (4 and -27/4, not the 1/4 and 27/4 one
// might expect by analogy) are forced by the binomial duplication and
// triplication identities; each congruence is validated exhaustively by the
// test suite.

#ifndef HYPROOTS_CURVES_HPP
#define HYPROOTS_CURVES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyproots/hyptrunc.hpp"
#include "hyproots/poly.hpp"

namespace hyproots {

enum class Family { legendre2, b3, b4, b6, e_lambda };

const char* family_name(Family f);
Family family_from_name(const std::string& s);
Family family_from_b(int b);  // 2,3,4,6

// hypergeometric data of a family: spec, argument scaling, sign
struct FamilyHyp {
    HypSpec spec;
    std::int64_t scale_num = 1;  // argument = (scale_num/scale_den) * lambda
    std::int64_t scale_den = 1;
    int sign = -1;               // F(scale*lambda) = sign * char_sum
};
FamilyHyp family_hyp(Family f);

// largest number of family members a single F_p-isomorphism class can hold
std::uint32_t family_class_bound(Family f);

// S(a,b) = sum_x x^a (1+x)^b
std::uint32_t char_sum_S(std::uint64_t a, std::uint64_t b, const PrimeField& F);
// binomial shortcut: -sum_{j: 2D | a+j, 0<=j<=b} C(b,j), valid for a > 0
std::uint32_t char_sum_S_binomial(std::uint64_t a, std::uint64_t b, const PrimeField& F);

// the cubic in x defining the family at a given lambda (monic forms used for
// isomorphism grouping keep a1=a3=0)
Poly family_cubic(Family f, std::uint32_t lambda, const PrimeField& F);

struct CurveCount {
    std::uint32_t lambda = 0;
    bool singular = false;
    std::int64_t trace = 0;       // a_p = n_p - p - 1 = sum_x chi(f(x)); 0 when singular
    std::uint32_t char_sum = 0;   // sum_x [f(x)]^D as a residue
};

// O(p) per lambda via the quadratic-character table
CurveCount count_curve(Family f, std::uint32_t lambda, const QuadCharTable& chi);

// brute-force oracle: count affine points of z^2 = f(x) by direct enumeration
std::int64_t brute_force_trace(Family f, std::uint32_t lambda, const PrimeField& F);

struct CorrespondenceReport {
    Family family = Family::legendre2;
    std::uint32_t p = 0;
    std::uint32_t checked = 0;
    std::vector<std::uint32_t> mismatches;  // lambdas failing the congruence
    bool ok() const { return mismatches.empty(); }
};

// asserts the family congruence for every admissible lambda; for e_lambda
// the I_lambda relation (including the -2^D factor) is verified instead
CorrespondenceReport hyp_curve_correspondence(Family f, const PrimeField& F);

// ---- K3 counting functions ----
enum class K3Mode { double_sum, coeff_poly };

// J_{lambda,b}; lambda != 0. double_sum is O(p^2), coeff_poly O(p).
// Surfaces: b=2: z^2 = x(x+1)y(y+1)(x+lambda y);
//           b=3: z^2 = x(x+1)y(x y (y+1)^2 + lambda)  [see note below];
//           b=4: z^2 = x(x+y)y(x(y+1)+lambda);
//           b=6: z^2 = x y (x(x+y+1) + lambda y^3).
// Coefficient forms (D = (p-1)/2):
//   b=2: sum C(D,n)^3 lambda^n
//   b=3: 1 + sum C(D,n)^2 C(2D-2n,n) lambda^n
//   b=4: sum C(D,n)^2 C(D-n,n) lambda^n
//   b=6: sum C(D,n) C(D-n,n) C(D-2n,n) lambda^n
// The b=3 surface takes the form above (note the xy(y+1)^2 + lambda inner
// factor) so that the double sum reproduces the coefficient sum, constant
// offset included; this is checked exhaustively at small primes.
std::uint32_t count_k3(int b, std::uint32_t lambda, const QuadCharTable& chi, K3Mode mode);

struct ClausenCurveReport {
    std::uint32_t p = 0;
    std::uint32_t checked = 0;
    std::vector<std::uint32_t> mismatches;
    bool ok() const { return mismatches.empty(); }
};
// J_{lambda,2} = (1+lambda)^D I_lambda^2 for all lambda != 0,-1
ClausenCurveReport clausen_curve_check(const QuadCharTable& chi);

// ---- K3 criterion ----
struct K3Verdict {
    Poly g2, g3, delta;
    bool nonconstant_delta = false;   // (1)
    bool degree_bound = false;        // (2) with N = 2 minimal
    bool no_twelfth_power = false;    // (3), both orientations
    bool delta_matches_expected = false;
    bool all() const { return nonconstant_delta && degree_bound && no_twelfth_power; }
};

// evaluates the criterion for any lambda (including the excluded 0)
K3Verdict k3_conditions(int b, std::uint32_t lambda, const PrimeField& F);
// contract form: throws "ExcludedLambda" for lambda = 0
K3Verdict k3_criterion(int b, std::uint32_t lambda, const PrimeField& F);

// the factored discriminant from the derivation, expanded
Poly k3_expected_discriminant(int b, std::uint32_t lambda, const PrimeField& F);

// ---- isomorphism classes ----
struct IsoClassReport {
    Family family = Family::legendre2;
    std::uint32_t p = 0;
    std::uint32_t max_multiplicity = 0;
    std::vector<std::vector<std::uint32_t>> witness_groups;  // lambda groups of max size
    std::uint32_t admissible = 0;
};

// exhaustive lambda grouping by F_p-isomorphism of the curves
IsoClassReport iso_class_multiplicity(Family f, const PrimeField& F);

// F_p-isomorphism test for y^2 = x^3 + Ax + B vs y^2 = x^3 + A'x + B'
bool short_weierstrass_isomorphic(const PrimeField& F, std::uint32_t A1, std::uint32_t B1,
                                  std::uint32_t A2, std::uint32_t B2);

}  // namespace hyproots

#endif
