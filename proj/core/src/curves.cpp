#include "hyproots/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyproots {

const char* family_name(Family f) {
    switch (f) {
        case Family::legendre2: return "legendre";
        case Family::b3: return "b3";
        case Family::b4: return "b4";
        case Family::b6: return "b6";
        case Family::e_lambda: return "elambda";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "legendre" || s == "b2") return Family::legendre2;
    if (s == "b3") return Family::b3;
    if (s == "b4") return Family::b4;
    if (s == "b6") return Family::b6;
    if (s == "elambda" || s == "e_lambda") return Family::e_lambda;
    throw std::invalid_argument("unknown family \"" + s + "\"");
}

Family family_from_b(int b) {
    switch (b) {
        case 2: return Family::legendre2;
        case 3: return Family::b3;
        case 4: return Family::b4;
        case 6: return Family::b6;
        default: throw std::invalid_argument("family_from_b: b must be 2,3,4,6");
    }
}

FamilyHyp family_hyp(Family f) {
    switch (f) {
        case Family::legendre2:
            return {HypSpec{{{1, 2}, {1, 2}}, {{1, 1}}}, 1, 1, -1};
        case Family::b3:
            return {HypSpec{{{1, 3}, {2, 3}}, {{1, 1}}}, 27, 4, -1};
        case Family::b4:
            return {HypSpec{{{1, 4}, {3, 4}}, {{1, 1}}}, 4, 1, -1};
        case Family::b6:
            return {HypSpec{{{1, 6}, {5, 6}}, {{1, 1}}}, -27, 4, -1};
        case Family::e_lambda:
            return {HypSpec{{{1, 4}, {3, 4}}, {{1, 1}}}, 1, 1, -1};  // argument lambda/(1+lambda)
    }
    throw std::logic_error("family_hyp");
}

std::uint32_t family_class_bound(Family f) {
    switch (f) {
        case Family::legendre2: return 6;
        case Family::b3: return 13;
        case Family::b4: return 3;
        case Family::b6: return 2;
        case Family::e_lambda: return 3;
    }
    return 0;
}

std::uint32_t char_sum_S(std::uint64_t a, std::uint64_t b, const PrimeField& F) {
    std::uint32_t s = 0;
    for (std::uint32_t x = 0; x < F.p(); ++x) {
        std::uint32_t t = F.mul(F.pow(x, a), F.pow(F.add(1, x), b));
        s = F.add(s, t);
    }
    return s;
}

std::uint32_t char_sum_S_binomial(std::uint64_t a, std::uint64_t b, const PrimeField& F) {
    if (a == 0) throw std::invalid_argument("char_sum_S_binomial: needs a > 0");
    const std::uint64_t twoD = F.p() - 1;
    // factorial tables suffice while b < p; larger b would need Lucas
    if (b >= F.p()) throw std::invalid_argument("char_sum_S_binomial: b >= p unsupported");
    std::vector<std::uint32_t> fact(b + 1);
    fact[0] = 1;
    for (std::uint64_t i = 1; i <= b; ++i)
        fact[i] = F.mul(fact[i - 1], F.of_int(static_cast<std::int64_t>(i)));
    std::uint32_t s = 0;
    // j = 0 contributes only when 2D | a, i.e. a+j >= 1 multiple of 2D
    std::uint64_t j0 = a % twoD == 0 ? 0 : twoD - (a % twoD);
    for (std::uint64_t j = j0; j <= b; j += twoD) {
        std::uint32_t binom = F.mul(fact[b], F.inv(F.mul(fact[j], fact[b - j])));
        s = F.add(s, binom);
    }
    return F.neg(s);
}

Poly family_cubic(Family f, std::uint32_t lambda, const PrimeField& F) {
    const std::int64_t l = lambda;
    switch (f) {
        case Family::legendre2:  // x(x+1)(x+l) = x^3 + (1+l)x^2 + l x
            return Poly::of_ints(F, {0, l, 1 + l, 1});
        case Family::b3:  // x^3 + (x+l)^2 = x^3 + x^2 + 2l x + l^2
            return Poly::of_ints(F, {l * l, 2 * l, 1, 1});
        case Family::b4:  // x^3 + x^2 + l x
            return Poly::of_ints(F, {0, l, 1, 1});
        case Family::b6:  // x^3 + x^2 + l
            return Poly::of_ints(F, {l, 0, 1, 1});
        case Family::e_lambda: {  // (x-1)(x^2 - 1/(l+1)), l != 0,-1
            if (lambda == 0 || lambda == F.p() - 1)
                throw std::invalid_argument("ExcludedLambda: e_lambda needs lambda != 0,-1");
            const std::uint32_t c = F.inv(F.add(lambda, 1));
            // x^3 - x^2 - c x + c
            return Poly(F, {c, F.neg(c), F.neg(1), 1});
        }
    }
    throw std::logic_error("family_cubic");
}

namespace {

// discriminant of a monic cubic x^3 + a x^2 + b x + c
std::uint32_t cubic_disc(const Poly& f) {
    const PrimeField& F = f.field();
    const std::uint32_t a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    std::uint32_t d = F.mul(F.mul(18 % F.p(), F.mul(a, b)), c);
    d = F.sub(d, F.mul(4, F.mul(F.mul(a, a), F.mul(a, c))));
    d = F.add(d, F.mul(F.mul(a, a), F.mul(b, b)));
    d = F.sub(d, F.mul(4, F.mul(b, F.mul(b, b))));
    d = F.sub(d, F.mul(27 % F.p(), F.mul(c, c)));
    return d;
}

}  // namespace

CurveCount count_curve(Family f, std::uint32_t lambda, const QuadCharTable& chi) {
    const PrimeField& F = chi.field();
    CurveCount out;
    out.lambda = lambda;
    Poly cubic = [&]() -> Poly {
        try {
            return family_cubic(f, lambda, F);
        } catch (const std::invalid_argument&) {
            out.singular = true;
            return Poly(F);
        }
    }();
    if (out.singular) return out;
    out.singular = cubic_disc(cubic) == 0;

    std::int64_t t = 0;
    std::uint32_t cs = 0;
    const std::uint32_t c0 = cubic.coeff(0), c1 = cubic.coeff(1), c2 = cubic.coeff(2);
    for (std::uint32_t x = 0; x < F.p(); ++x) {
        // Horner for x^3 + c2 x^2 + c1 x + c0
        std::uint32_t v = F.add(F.mul(F.add(F.mul(F.add(x, c2), x), c1), x), c0);
        int ch = chi(v);
        t += ch;
        cs = F.add(cs, F.of_int(ch));
    }
    out.char_sum = cs;
    if (!out.singular) {
        out.trace = t;
        const double bound = 2.0 * std::sqrt(static_cast<double>(F.p()));
        if (static_cast<double>(t < 0 ? -t : t) > bound)
            throw std::logic_error("count_curve: trace outside the Hasse window (internal bug)");
    }
    return out;
}

std::int64_t brute_force_trace(Family f, std::uint32_t lambda, const PrimeField& F) {
    Poly cubic = family_cubic(f, lambda, F);
    std::uint64_t affine = 0;
    for (std::uint32_t x = 0; x < F.p(); ++x) {
        const std::uint32_t v = cubic.eval(x);
        for (std::uint32_t z = 0; z < F.p(); ++z)
            if (F.mul(z, z) == v) ++affine;
    }
    // one point at infinity; a_p = n_p - p - 1
    return static_cast<std::int64_t>(affine) + 1 - static_cast<std::int64_t>(F.p()) - 1;
}

CorrespondenceReport hyp_curve_correspondence(Family f, const PrimeField& F) {
    const QuadCharTable chi(F);
    CorrespondenceReport rep;
    rep.family = f;
    rep.p = F.p();
    const FamilyHyp fh = family_hyp(f);
    const TruncatedPoly trunc = truncate(fh.spec, F);
    const std::uint32_t D = F.half_degree();

    for (std::uint32_t lambda = 0; lambda < F.p(); ++lambda) {
        if (f == Family::b3 && lambda == 0) continue;  // derivation excludes it
        if (f == Family::e_lambda && (lambda == 0 || lambda == F.p() - 1)) continue;

        std::uint32_t lhs, rhs;
        if (f == Family::e_lambda) {
            // I_lambda = -2^D F(1/4,3/4;1; lambda/(1+lambda))
            std::uint32_t arg = F.mul(lambda, F.inv(F.add(1, lambda)));
            lhs = F.neg(F.mul(F.pow(2, D), trunc.poly.eval(arg)));
            std::uint32_t I = 0;
            const std::uint32_t c = F.inv(F.add(lambda, 1));
            for (std::uint32_t x = 0; x < F.p(); ++x) {
                std::uint32_t v = F.mul(F.sub(x, 1), F.sub(F.mul(x, x), c));
                I = F.add(I, F.of_int(chi(v)));
            }
            rhs = I;
        } else {
            const std::uint32_t scale = F.of_fraction(fh.scale_num, fh.scale_den);
            lhs = trunc.poly.eval(F.mul(scale, lambda));
            CurveCount cc = count_curve(f, lambda, chi);
            rhs = fh.sign < 0 ? F.neg(cc.char_sum) : cc.char_sum;
        }
        ++rep.checked;
        if (lhs != rhs) rep.mismatches.push_back(lambda);
    }
    return rep;
}

namespace {

std::vector<std::uint32_t> binomial_row(const PrimeField& F, std::uint32_t n) {
    // C(n, k) mod p for 0 <= k <= n, n < p
    std::vector<std::uint32_t> row(n + 1);
    row[0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k)
        row[k] = F.mul(row[k - 1], F.of_fraction(static_cast<std::int64_t>(n) - k + 1, k));
    return row;
}

}  // namespace

std::uint32_t count_k3(int b, std::uint32_t lambda, const QuadCharTable& chi, K3Mode mode) {
    const PrimeField& F = chi.field();
    const std::uint32_t p = F.p();
    if (lambda % p == 0) throw std::invalid_argument("ExcludedLambda: K3 families need lambda != 0");
    if (b != 2 && b != 3 && b != 4 && b != 6)
        throw std::invalid_argument("count_k3: b must be 2,3,4,6");

    if (mode == K3Mode::double_sum) {
        std::int64_t s = 0;
        for (std::uint32_t x = 0; x < p; ++x) {
            for (std::uint32_t y = 0; y < p; ++y) {
                std::uint32_t v;
                switch (b) {
                    case 2:  // x(x+1)y(y+1)(x+lambda y)
                        v = F.mul(F.mul(F.mul(x, F.add(x, 1)), F.mul(y, F.add(y, 1))),
                                  F.add(x, F.mul(lambda, y)));
                        break;
                    case 3: {  // x(x+1)y(x y (y+1)^2 + lambda)
                        std::uint32_t y1 = F.add(y, 1);
                        std::uint32_t inner = F.add(F.mul(F.mul(x, y), F.mul(y1, y1)), lambda);
                        v = F.mul(F.mul(F.mul(x, F.add(x, 1)), y), inner);
                        break;
                    }
                    case 4: {  // x(x+y)y(x(y+1)+lambda)
                        std::uint32_t inner = F.add(F.mul(x, F.add(y, 1)), lambda);
                        v = F.mul(F.mul(F.mul(x, F.add(x, y)), y), inner);
                        break;
                    }
                    default: {  // b=6: x y (x(x+y+1) + lambda y^3)
                        std::uint32_t inner =
                            F.add(F.mul(x, F.add(F.add(x, y), 1)),
                                  F.mul(lambda, F.mul(y, F.mul(y, y))));
                        v = F.mul(F.mul(x, y), inner);
                        break;
                    }
                }
                s += chi(v);
            }
        }
        return F.of_int(s);
    }

    // coefficient polynomials
    const std::uint32_t D = F.half_degree();
    const std::vector<std::uint32_t> cd = binomial_row(F, D);
    std::uint32_t acc = 0, lpow = 1;
    for (std::uint32_t n = 0; n <= D; ++n) {
        std::uint32_t term = 0;
        switch (b) {
            case 2:
                term = F.mul(F.mul(cd[n], cd[n]), cd[n]);
                break;
            case 3: {
                // C(2D-2n, n): build via product formula
                if (2 * D >= 3 * n) {
                    std::uint32_t c = 1;
                    for (std::uint32_t j = 0; j < n; ++j)
                        c = F.mul(c, F.of_fraction(static_cast<std::int64_t>(2 * D) - 2 * n - j,
                                                   static_cast<std::int64_t>(j) + 1));
                    term = F.mul(F.mul(cd[n], cd[n]), c);
                }
                break;
            }
            case 4: {
                if (D >= 2 * n) {
                    std::uint32_t c = 1;
                    for (std::uint32_t j = 0; j < n; ++j)
                        c = F.mul(c, F.of_fraction(static_cast<std::int64_t>(D) - n - j,
                                                   static_cast<std::int64_t>(j) + 1));
                    term = F.mul(F.mul(cd[n], cd[n]), c);
                }
                break;
            }
            default: {  // b=6: C(D,n) C(D-n,n) C(D-2n,n)
                if (D >= 3 * n) {
                    std::uint32_t c1 = 1, c2 = 1;
                    for (std::uint32_t j = 0; j < n; ++j) {
                        c1 = F.mul(c1, F.of_fraction(static_cast<std::int64_t>(D) - n - j,
                                                     static_cast<std::int64_t>(j) + 1));
                        c2 = F.mul(c2, F.of_fraction(static_cast<std::int64_t>(D) - 2 * n - j,
                                                     static_cast<std::int64_t>(j) + 1));
                    }
                    term = F.mul(cd[n], F.mul(c1, c2));
                }
                break;
            }
        }
        acc = F.add(acc, F.mul(term, lpow));
        lpow = F.mul(lpow, lambda);
    }
    if (b == 3) acc = F.add(acc, 1);  // the derivation's constant offset
    return acc;
}

ClausenCurveReport clausen_curve_check(const QuadCharTable& chi) {
    const PrimeField& F = chi.field();
    ClausenCurveReport rep;
    rep.p = F.p();
    const std::uint32_t D = F.half_degree();
    for (std::uint32_t lambda = 1; lambda < F.p() - 1; ++lambda) {
        // J_{lambda,2} (coefficient mode) vs (1+lambda)^D I_lambda^2
        std::uint32_t J = count_k3(2, lambda, chi, K3Mode::coeff_poly);
        std::uint32_t I = 0;
        const std::uint32_t c = F.inv(F.add(lambda, 1));
        for (std::uint32_t x = 0; x < F.p(); ++x) {
            std::uint32_t v = F.mul(F.sub(x, 1), F.sub(F.mul(x, x), c));
            I = F.add(I, F.of_int(chi(v)));
        }
        std::uint32_t rhs = F.mul(F.pow(F.add(1, lambda), D), F.mul(I, I));
        ++rep.checked;
        if (J != rhs) rep.mismatches.push_back(lambda);
    }
    return rep;
}

// ---- K3 criterion ----

namespace {

// transformed Weierstrass coefficients a2(y), a4(y) (a6 = 0 for all three)
void k3_surface_coeffs(int b, std::uint32_t lambda, const PrimeField& F, Poly& a2, Poly& a4) {
    const Poly y = Poly::x(F);
    const Poly y1 = Poly::of_ints(F, {1, 1});
    switch (b) {
        case 3:  // a2 = y^2 + l y(y+1)^2, a4 = l y^3 (y+1)^2
            a2 = y * y + (y * y1 * y1).scaled(lambda);
            a4 = (y * y * y * y1 * y1).scaled(lambda);
            break;
        case 4:  // a2 = y^2(y+1) + l y, a4 = l y^3 (y+1)
            a2 = y * y * y1 + y.scaled(lambda);
            a4 = (y * y * y * y1).scaled(lambda);
            break;
        case 6:  // a2 = y^2(y+1), a4 = l y^3
            a2 = y * y * y1;
            a4 = (y * y * y).scaled(lambda);
            break;
        default:
            throw std::invalid_argument("k3 criterion: b must be 3, 4 or 6");
    }
}

}  // namespace

Poly k3_expected_discriminant(int b, std::uint32_t lambda, const PrimeField& F) {
    const Poly y = Poly::x(F);
    const Poly y1 = Poly::of_ints(F, {1, 1});
    const std::uint32_t l = lambda;
    const std::uint32_t c16l2 = F.mul(16 % F.p(), F.mul(l, l));
    switch (b) {
        case 3: {  // 16 l^2 y^8 (y+1)^4 (l y^2 + (2l-1) y + l)^2
            Poly q(F, {l, F.sub(F.mul(2, l), 1), l});
            return (y.pow(8) * y1.pow(4) * q * q).scaled(c16l2);
        }
        case 4: {  // 16 l^2 y^8 (y+1)^2 (y^2 + y - l)^2
            Poly q(F, {F.neg(l), 1, 1});
            return (y.pow(8) * y1 * y1 * q * q).scaled(c16l2);
        }
        case 6: {  // 16 l^2 y^9 (y^3 + 2y^2 + y - 4l)
            Poly q(F, {F.neg(F.mul(4, l)), 1, 2, 1});
            return (y.pow(9) * q).scaled(c16l2);
        }
        default:
            throw std::invalid_argument("k3 criterion: b must be 3, 4 or 6");
    }
}

K3Verdict k3_conditions(int b, std::uint32_t lambda, const PrimeField& F) {
    Poly a2(F), a4(F);
    k3_surface_coeffs(b, lambda, F, a2, a4);
    const Poly a6(F);

    K3Verdict v{Poly(F), Poly(F), Poly(F)};
    // g2 = (4/3) a2^2 - 4 a4 ; g3 = -(8/27) a2^3 + (4/3) a2 a4 - 4 a6
    v.g2 = (a2 * a2).scaled(F.of_fraction(4, 3)) - a4.scaled(4);
    v.g3 = (a2 * a2 * a2).scaled(F.neg(F.of_fraction(8, 27))) +
           (a2 * a4).scaled(F.of_fraction(4, 3)) - a6.scaled(4);
    v.delta = v.g2 * v.g2 * v.g2 - (v.g3 * v.g3).scaled(27 % F.p());

    v.nonconstant_delta = v.delta.degree() >= 1;

    // (2): the least N with deg a_i <= N*i for all i must be exactly 2
    auto min_n = [](int deg, int i) { return deg <= 0 ? 0 : (deg + i - 1) / i; };
    int needN = std::max({min_n(a2.degree(), 2), min_n(a4.degree(), 4), min_n(a6.degree(), 6)});
    v.degree_bound = (needN == 2);

    // (3): neither gcd(g2^3, g3^2) nor the y -> 1/y reversal may contain a
    // 12th power of a nonconstant polynomial; reversal degree 12N = 24
    const Poly g2c = v.g2 * v.g2 * v.g2;
    const Poly g3s = v.g3 * v.g3;
    bool ok3 = true;
    if (!g2c.is_zero() || !g3s.is_zero()) {
        Poly g = poly_gcd(g2c, g3s);
        if (!g.is_zero() && g.degree() >= 12 && has_twelfth_power_factor(g)) ok3 = false;
        if (g2c.degree() <= 24 && g3s.degree() <= 24) {
            Poly gr = poly_gcd(g2c.is_zero() ? g2c : g2c.reversed(24),
                               g3s.is_zero() ? g3s : g3s.reversed(24));
            if (!gr.is_zero() && gr.degree() >= 12 && has_twelfth_power_factor(gr)) ok3 = false;
        }
    } else {
        ok3 = false;  // gcd(0,0) divisible by everything
    }
    v.no_twelfth_power = ok3;

    v.delta_matches_expected = (v.delta == k3_expected_discriminant(b, lambda, F));
    return v;
}

K3Verdict k3_criterion(int b, std::uint32_t lambda, const PrimeField& F) {
    if (lambda % F.p() == 0) throw std::invalid_argument("ExcludedLambda: lambda = 0");
    return k3_conditions(b, lambda, F);
}

// ---- isomorphism classes ----

bool short_weierstrass_isomorphic(const PrimeField& F, std::uint32_t A1, std::uint32_t B1,
                                  std::uint32_t A2, std::uint32_t B2) {
    // E_{A,B} ~ E_{A',B'} over F_p iff A' = u^4 A, B' = u^6 B for some u != 0.
    if (A1 == 0 || A2 == 0) {
        if (A1 != A2) return false;
        if (B1 == 0 || B2 == 0) return B1 == B2;  // j=0 and nonsingular excludes B=0 with A=0
        // need B2/B1 a sixth power
        std::uint32_t r = F.mul(B2, F.inv(B1));
        std::uint64_t e = (F.p() - 1) / std::gcd<std::uint64_t>(6, F.p() - 1);
        return F.pow(r, e) == 1;
    }
    if (B1 == 0 || B2 == 0) {
        if (B1 != B2) return false;
        std::uint32_t r = F.mul(A2, F.inv(A1));
        std::uint64_t e = (F.p() - 1) / std::gcd<std::uint64_t>(4, F.p() - 1);
        return F.pow(r, e) == 1;
    }
    // s = u^2 = (B2/B1)/(A2/A1); check s^2 = A2/A1, s^3 = B2/B1, chi(s) = 1
    const std::uint32_t ra = F.mul(A2, F.inv(A1));
    const std::uint32_t rb = F.mul(B2, F.inv(B1));
    const std::uint32_t s = F.mul(rb, F.inv(ra));
    if (F.mul(s, s) != ra) return false;
    if (F.mul(F.mul(s, s), s) != rb) return false;
    return F.legendre(s) == 1;
}

namespace {

// depress y^2 = x^3 + a2 x^2 + a4 x + a6 to y^2 = x^3 + Ax + B
void depress(const PrimeField& F, std::uint32_t a2, std::uint32_t a4, std::uint32_t a6,
             std::uint32_t& A, std::uint32_t& B) {
    const std::uint32_t third = F.of_fraction(1, 3);
    const std::uint32_t s = F.mul(a2, third);  // shift x -> x - a2/3
    A = F.sub(a4, F.mul(a2, s));
    // B = a6 - a4*s + 2*s^3  (expand (x-s)^3 + a2(x-s)^2 + a4(x-s) + a6)
    B = F.add(F.sub(a6, F.mul(a4, s)), F.mul(2, F.mul(s, F.mul(s, s))));
}

}  // namespace

IsoClassReport iso_class_multiplicity(Family f, const PrimeField& F) {
    IsoClassReport rep;
    rep.family = f;
    rep.p = F.p();

    struct Entry {
        std::uint32_t lambda, A, B;
    };
    std::vector<Entry> entries;
    for (std::uint32_t lambda = 0; lambda < F.p(); ++lambda) {
        Poly cubic = [&]() -> Poly {
            try {
                return family_cubic(f, lambda, F);
            } catch (const std::invalid_argument&) {
                return Poly(F);
            }
        }();
        if (cubic.is_zero() || cubic_disc(cubic) == 0) continue;  // excluded or singular
        std::uint32_t A, B;
        depress(F, cubic.coeff(2), cubic.coeff(1), cubic.coeff(0), A, B);
        entries.push_back({lambda, A, B});
    }
    rep.admissible = static_cast<std::uint32_t>(entries.size());

    // group by j-invariant first (cheap exact filter), then pairwise tests
    std::map<std::uint32_t, std::vector<std::size_t>> by_j;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::uint32_t A = entries[i].A, B = entries[i].B;
        const std::uint32_t fourA3 = F.mul(4, F.mul(A, F.mul(A, A)));
        const std::uint32_t den = F.add(fourA3, F.mul(27 % F.p(), F.mul(B, B)));
        const std::uint32_t j = F.mul(F.mul(1728 % F.p(), fourA3), F.inv(den));
        by_j[j].push_back(i);
    }

    for (auto& [j, idxs] : by_j) {
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t i : idxs) {
            bool placed = false;
            for (auto& cls : classes) {
                const Entry& a = entries[cls.front()];
                const Entry& b = entries[i];
                if (short_weierstrass_isomorphic(F, a.A, a.B, b.A, b.B)) {
                    cls.push_back(i);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({i});
        }
        for (const auto& cls : classes) {
            if (cls.size() > rep.max_multiplicity) {
                rep.max_multiplicity = static_cast<std::uint32_t>(cls.size());
                rep.witness_groups.clear();
            }
            if (cls.size() == rep.max_multiplicity) {
                std::vector<std::uint32_t> lams;
                for (std::size_t i : cls) lams.push_back(entries[i].lambda);
                rep.witness_groups.push_back(std::move(lams));
            }
        }
    }
    return rep;
}

}  // namespace hyproots
