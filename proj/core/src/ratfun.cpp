#include "hyproots/ratfun.hpp"

#include <numeric>
#include <stdexcept>

#include "hyproots/hyptrunc.hpp"

namespace hyproots {

RationalFun::RationalFun(std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                         std::int64_t cn, std::int64_t cd)
    : A(std::move(a)), B(std::move(b)), c_num(cn), c_den(cd) {
    while (!A.empty() && A.back() == 0) A.pop_back();
    while (!B.empty() && B.back() == 0) B.pop_back();
    if (B.empty() || B[0] == 0)
        throw std::invalid_argument("RationalFun: B(0) must be nonzero (regular at 0)");
    if (c_den == 0) throw std::invalid_argument("RationalFun: zero scalar denominator");
}

std::string RationalFun::str() const {
    auto poly_str = [](const std::vector<std::int64_t>& v) {
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (!first) s += v[i] > 0 ? "+" : "-";
            else if (v[i] < 0) s += "-";
            first = false;
            const std::int64_t av = v[i] < 0 ? -v[i] : v[i];
            if (av != 1 || i == 0) s += std::to_string(av);
            if (i >= 1) s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s.empty() ? std::string("0") : s;
    };
    std::string s;
    if (c_num != 1 || c_den != 1)
        s += "(" + std::to_string(c_num) + "/" + std::to_string(c_den) + ")*";
    s += "(" + poly_str(A) + ")/(" + poly_str(B) + ")";
    return s;
}

RatTruncation truncate_rational(const RationalFun& f, const PrimeField& F, std::uint32_t k) {
    const std::uint32_t p = F.p();
    if (k < 1 || k >= p) throw std::invalid_argument("truncate_rational: need 1 <= k < p");
    if (f.B[0] % p == 0 || f.c_den % p == 0)
        throw std::invalid_argument("BadPrime: p divides B(0) or the scalar denominator");

    Poly A(F), B(F);
    {
        std::vector<std::uint32_t> av(f.A.size()), bv(f.B.size());
        for (std::size_t i = 0; i < f.A.size(); ++i) av[i] = F.of_int(f.A[i]);
        for (std::size_t i = 0; i < f.B.size(); ++i) bv[i] = F.of_int(f.B[i]);
        A = Poly(F, std::move(av));
        B = Poly(F, std::move(bv));
    }
    const std::uint32_t c = F.of_fraction(f.c_num, f.c_den);
    const std::uint32_t b0inv = F.inv(F.of_int(f.B[0]));

    // B * F = cA termwise: f_n = (c a_n - sum_{j>=1} B_j f_{n-j}) / B_0
    const std::uint32_t n_top = p - k;
    std::vector<std::uint32_t> coef(n_top + 1, 0);
    for (std::uint32_t n = 0; n <= n_top; ++n) {
        std::uint32_t rhs = F.mul(c, A.coeff(n));
        const std::size_t jmax = std::min<std::size_t>(n, static_cast<std::size_t>(
                                                              std::max(B.degree(), 0)));
        for (std::size_t j = 1; j <= jmax; ++j)
            rhs = F.sub(rhs, F.mul(B.coeff(j), coef[n - j]));
        coef[n] = F.mul(rhs, b0inv);
    }
    // a constant denominator means F is a polynomial and the truncation is F
    // itself; only genuinely rational inputs carry the f_{p-k} != 0 contract
    if (coef[n_top] == 0 && B.degree() > 0)
        throw std::invalid_argument("BadK: f_{p-k} = 0 mod p");

    RatTruncation out{Poly(F, std::move(coef)), k, Poly(F)};

    // Q_p = B F_p - cA vanishes to order p-k+1 at 0; Q*_p is the cofactor
    Poly Q = B * out.poly - A.scaled(c);
    std::vector<std::uint32_t> qs;
    const std::size_t shift = p - k + 1;
    for (int i = 0; i <= Q.degree(); ++i) {
        if (static_cast<std::size_t>(i) < shift) {
            if (Q.coeff(static_cast<std::size_t>(i)) != 0)
                throw std::logic_error("truncate_rational: Q_p has low-order terms (internal)");
        } else {
            qs.push_back(Q.coeff(static_cast<std::size_t>(i)));
        }
    }
    out.q_star = Poly(F, std::move(qs));
    return out;
}

RatTruncation truncate_rational_auto(const RationalFun& f, const PrimeField& F,
                                     std::uint32_t k_max) {
    for (std::uint32_t k = 1; k <= k_max; ++k) {
        try {
            return truncate_rational(f, F, k);
        } catch (const std::invalid_argument& e) {
            if (std::string(e.what()).rfind("BadK", 0) != 0) throw;
        }
    }
    throw std::invalid_argument("BadK: no admissible k <= " + std::to_string(k_max));
}

ValueClassification classify_values(const RationalFun& f, const PrimeField& F, std::uint32_t k) {
    const std::uint32_t p = F.p();
    RatTruncation t = truncate_rational(f, F, k);

    Poly A(F), B(F);
    {
        std::vector<std::uint32_t> av(f.A.size()), bv(f.B.size());
        for (std::size_t i = 0; i < f.A.size(); ++i) av[i] = F.of_int(f.A[i]);
        for (std::size_t i = 0; i < f.B.size(); ++i) bv[i] = F.of_int(f.B[i]);
        A = Poly(F, std::move(av));
        B = Poly(F, std::move(bv));
    }
    const std::uint32_t c = F.of_fraction(f.c_num, f.c_den);

    ValueClassification out;
    out.value_counts.assign(p, 0);
    for (std::uint32_t x = 0; x < p; ++x) ++out.value_counts[t.poly.eval(x)];

    const Poly xq = t.q_star.shifted(1);
    const Poly cA = A.scaled(c);
    out.counts_within_bound = true;
    for (std::uint32_t m = 0; m < p; ++m) {
        // R_{p,m} = x^{k-1}(B m - cA) - x Q*_p
        Poly R = (B.scaled(m) - cA).shifted(k - 1) - xq;
        if (R.is_zero()) {
            if (out.exceptional_m0)
                throw std::logic_error("classify_values: two exceptional classes (impossible)");
            out.exceptional_m0 = m;
            continue;
        }
        out.bounded_bound = std::max(out.bounded_bound, R.degree());
        // count roots of R and verify the value count is covered
        std::uint32_t roots = 0;
        for (std::uint32_t x = 0; x < p; ++x)
            if (R.eval(x) == 0) ++roots;
        if (out.value_counts[m] > roots) out.counts_within_bound = false;
    }
    return out;
}

AlgebraicExampleReport algebraic_example_check(std::uint32_t u, std::uint32_t v,
                                               const PrimeField& F) {
    if (u == 0 || v == 0 || u > v || std::gcd(u, v) != 1)
        throw std::invalid_argument("algebraic_example_check: need coprime 0 < u/v <= 1");
    const std::uint32_t p = F.p();
    if (p % (2 * v) != 1)
        throw std::invalid_argument("algebraic_example_check: need p = 1 mod 2v");

    AlgebraicExampleReport rep;
    rep.p = p;
    const std::uint64_t E = static_cast<std::uint64_t>(p - 1) / (2 * v) * u;
    rep.degree = E;

    // 2F1(u/2v, (u+v)/2v; 1/2; y) truncation
    auto reduce = [](std::uint32_t a, std::uint32_t b) {
        const std::uint32_t g = std::gcd(a, b);
        return Rational(a / g, b / g);
    };
    const HypSpec spec{{reduce(u, 2 * v), reduce(u + v, 2 * v)}, {{1, 2}}};
    const TruncatedPoly tp = truncate(spec, F);

    // identity: F(x^2) = ((1-x)^{2E} + (1+x)^{2E})/2, i.e. F(y) matches the
    // even part: coeff_n(F) = C(2E, 2n)
    bool ok = static_cast<std::uint64_t>(tp.poly.degree()) == E;
    std::uint32_t binom = 1;  // C(2E, 0)
    for (std::uint64_t n = 0; ok && n <= E; ++n) {
        if (tp.poly.coeff(n) != binom) ok = false;
        // C(2E, 2n+2) = C(2E,2n) * (2E-2n)(2E-2n-1) / ((2n+1)(2n+2))
        if (n < E) {
            const std::int64_t tn = static_cast<std::int64_t>(2 * n);
            const std::int64_t te = static_cast<std::int64_t>(2 * E);
            binom = F.mul(binom, F.of_fraction((te - tn) % p * ((te - tn - 1) % p) % p,
                                               (tn + 1) % p * ((tn + 2) % p) % p));
        }
    }
    rep.identity_holds = ok;

    // attained values of F(x^2), tracking which come only from x = +-1
    std::vector<bool> attained(p, false), interior(p, false);
    for (std::uint32_t x = 0; x < p; ++x) {
        const std::uint32_t m = tp.poly.eval(F.mul(x, x));
        attained[m] = true;
        if (x != 1 && x != p - 1) interior[m] = true;
    }
    for (std::uint32_t m = 0; m < p; ++m)
        if (attained[m]) rep.attained.push_back(m);

    if (u == 2 && v == 3) {
        rep.boundary_value = F.pow(2, 2 * E - 1);
        auto is_root = [&](std::uint32_t m) {
            const std::uint32_t m3 = F.mul(m, F.mul(m, m));
            const std::uint32_t t = F.sub(F.mul(4, m3), 1);
            return F.mul(t, F.mul(t, t)) == F.mul(27 % p, m3);
        };
        rep.attained_are_roots = true;
        rep.interior_attained_are_roots = true;
        for (std::uint32_t m : rep.attained) {
            if (!is_root(m)) {
                rep.attained_are_roots = false;
                if (interior[m]) rep.interior_attained_are_roots = false;
            }
        }
        rep.attained_bounded = rep.attained.size() <= 7;
    }
    return rep;
}

}  // namespace hyproots
