#include "hyproots/hyptrunc.hpp"

#include <numeric>
#include <stdexcept>

namespace hyproots {

Rational::Rational(std::uint32_t a, std::uint32_t b) : num(a), den(b) {
    if (a == 0 || b == 0 || a > b || std::gcd(a, b) != 1)
        throw std::invalid_argument("NonReduced: " + std::to_string(a) + "/" + std::to_string(b));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string HypSpec::str() const {
    std::string s = std::to_string(upper.size()) + "F" + std::to_string(lower.size()) + "(";
    for (std::size_t i = 0; i < upper.size(); ++i) {
        if (i) s += ",";
        s += upper[i].str();
    }
    if (!lower.empty()) {
        s += ";";
        for (std::size_t i = 0; i < lower.size(); ++i) {
            if (i) s += ",";
            s += lower[i].str();
        }
    }
    s += ")";
    return s;
}

namespace {

[[noreturn]] void parse_fail(std::string_view s, std::size_t pos, const std::string& why) {
    throw std::invalid_argument("parse_hyp_spec: " + why + " at position " +
                                std::to_string(pos) + " in \"" + std::string(s) + "\"");
}

std::uint64_t read_uint(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    std::uint64_t v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        v = v * 10 + (s[i] - '0');
        if (v > (1ull << 32)) parse_fail(s, start, "number too large");
        ++i;
    }
    if (i == start) parse_fail(s, i, "expected a number");
    return v;
}

Rational read_rational(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    std::uint64_t a = read_uint(s, i);
    std::uint64_t b = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        b = read_uint(s, i);
    }
    if (a == 0 || b == 0 || a > b || std::gcd(a, b) != 1)
        throw std::invalid_argument("NonReduced: " + std::to_string(a) + "/" + std::to_string(b) +
                                    " at position " + std::to_string(start));
    return Rational(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
}

}  // namespace

HypSpec parse_hyp_spec(std::string_view s) {
    std::size_t i = 0;
    std::uint64_t d = read_uint(s, i);
    if (i >= s.size() || s[i] != 'F') parse_fail(s, i, "expected 'F'");
    ++i;
    std::uint64_t e = read_uint(s, i);
    if (d < 1 || e != d - 1) parse_fail(s, 0, "want dF(d-1)");
    if (i >= s.size() || s[i] != '(') parse_fail(s, i, "expected '('");
    ++i;
    HypSpec spec;
    for (std::uint64_t k = 0; k < d; ++k) {
        if (k) {
            if (i >= s.size() || s[i] != ',') parse_fail(s, i, "expected ','");
            ++i;
        }
        spec.upper.push_back(read_rational(s, i));
    }
    if (e > 0) {
        if (i >= s.size() || s[i] != ';') parse_fail(s, i, "expected ';'");
        ++i;
        for (std::uint64_t k = 0; k < e; ++k) {
            if (k) {
                if (i >= s.size() || s[i] != ',') parse_fail(s, i, "expected ','");
                ++i;
            }
            spec.lower.push_back(read_rational(s, i));
        }
    }
    if (i >= s.size() || s[i] != ')') parse_fail(s, i, "expected ')'");
    ++i;
    if (i != s.size()) parse_fail(s, i, "trailing characters");
    return spec;
}

namespace {

ParamBound bound_for(const Rational& r, bool lower, const PrimeField& F) {
    const std::uint64_t p = F.p();
    if (r.den % p == 0) throw std::invalid_argument("BadPrime: p divides a parameter denominator");
    ParamBound b;
    b.param = r;
    b.is_lower = lower;
    // n = least nonnegative solution of a + n b = 0 mod p. For reduced a/b
    // with a, b < p this is (u p - a)/b with u the least positive residue of
    // a p^{-1} mod b; for p | a the product vanishes immediately and n = 0.
    const std::uint32_t bid = F.of_int(static_cast<std::int64_t>(r.den % p));
    const std::uint32_t av = F.of_int(static_cast<std::int64_t>(r.num % p));
    b.n = F.mul(F.neg(av), F.inv(bid));
    b.omega = static_cast<std::uint32_t>((b.n * r.den + r.num) / p);
    return b;
}

}  // namespace

TruncationReport truncation_degree(const HypSpec& spec, const PrimeField& F) {
    if (spec.upper.empty() || spec.lower.size() + 1 != spec.upper.size())
        throw std::invalid_argument("truncation_degree: malformed spec");
    TruncationReport rep;
    for (const Rational& r : spec.upper) rep.bounds.push_back(bound_for(r, false, F));
    for (const Rational& r : spec.lower) rep.bounds.push_back(bound_for(r, true, F));
    rep.N = F.p() - 1;  // the implicit n! bound
    rep.factorial_bound = true;
    rep.min_index = rep.bounds.size();
    for (std::size_t i = 0; i < rep.bounds.size(); ++i) {
        if (rep.bounds[i].n < rep.N) {
            rep.N = rep.bounds[i].n;
            rep.min_index = i;
            rep.factorial_bound = false;
        }
    }
    return rep;
}

TruncatedPoly truncate(const HypSpec& spec, const PrimeField& F) {
    TruncationReport rep = truncation_degree(spec, F);
    const std::uint64_t N = rep.N;
    std::vector<std::uint32_t> coeff(N + 1, 0);
    coeff[0] = 1;

    // term-ratio recurrence: c_{n+1} = c_n * prod_i(a_i + n b_i) * L /
    // ( U * (n+1) * prod_j(c_j + n d_j) ), with U = prod b_i and L = prod d_j
    // folded into one constant; the variable denominators are inverted in
    // blocks of 64 via Montgomery's trick.
    std::uint32_t upper_dens = 1, lower_dens = 1;
    for (const Rational& r : spec.upper) upper_dens = F.mul(upper_dens, F.of_int(r.den));
    for (const Rational& r : spec.lower) lower_dens = F.mul(lower_dens, F.of_int(r.den));
    const std::uint32_t const_factor = F.mul(lower_dens, F.inv(upper_dens));

    constexpr std::uint64_t kBlock = 64;
    std::vector<std::uint32_t> nums(kBlock), dens(kBlock), prefix(kBlock + 1);
    for (std::uint64_t base = 0; base < N; base += kBlock) {
        const std::uint64_t len = std::min(kBlock, N - base);
        for (std::uint64_t k = 0; k < len; ++k) {
            const auto n = static_cast<std::int64_t>((base + k) % F.p());
            std::uint32_t nu = const_factor;
            for (const Rational& r : spec.upper)
                nu = F.mul(nu, F.of_int(r.num + n * r.den));
            std::uint32_t de = F.of_int(n + 1);
            for (const Rational& r : spec.lower)
                de = F.mul(de, F.of_int(r.num + n * r.den));
            nums[k] = nu;
            dens[k] = de;
        }
        prefix[0] = 1;
        for (std::uint64_t k = 0; k < len; ++k) prefix[k + 1] = F.mul(prefix[k], dens[k]);
        std::uint32_t invall = F.inv(prefix[len]);
        for (std::uint64_t k = len; k-- > 0;) {
            nums[k] = F.mul(nums[k], F.mul(invall, prefix[k]));  // now the full ratio
            invall = F.mul(invall, dens[k]);
        }
        for (std::uint64_t k = 0; k < len; ++k)
            coeff[base + k + 1] = F.mul(coeff[base + k], nums[k]);
    }

    TruncatedPoly out{Poly(F, std::move(coeff)), std::move(rep), spec};
    if (out.poly.degree() != static_cast<int>(N))
        throw std::logic_error("truncate: leading coefficient vanished (internal)");
    return out;
}

std::uint32_t pochhammer(const Rational& a, std::uint64_t n, const PrimeField& F) {
    if (a.den % F.p() == 0) throw std::invalid_argument("BadPrime: p divides denominator");
    const std::uint32_t ainv = F.inv(F.of_int(a.den));
    std::uint32_t r = 1, term = F.of_int(a.num);
    const std::uint32_t step = F.of_int(a.den);
    for (std::uint64_t j = 0; j < n; ++j) {
        r = F.mul(r, F.mul(term, ainv));
        term = F.add(term, step);
    }
    return r;
}

std::uint32_t pochhammer(std::uint32_t a, std::uint64_t n, const PrimeField& F) {
    std::uint32_t r = 1, term = a % F.p();
    for (std::uint64_t j = 0; j < n; ++j) {
        r = F.mul(r, term);
        term = F.add(term, 1);
    }
    return r;
}

FqElem pochhammer(const FqElem& a, std::uint64_t n, const ExtField& K) {
    FqElem r = K.one(), term = a;
    const FqElem one = K.one();
    for (std::uint64_t j = 0; j < n; ++j) {
        r = K.mul(r, term);
        term = K.add(term, one);
    }
    return r;
}

IntegralityResult binomial_integrality_check(unsigned a, unsigned b, unsigned n) {
    mpz_class bz(b), az(a);
    mpz_class g = gcd(az, bz);
    mpq_class v(1);
    mpz_class bpow;
    mpz_pow_ui(bpow.get_mpz_t(), bz.get_mpz_t(), n);
    mpz_class gpow;
    mpz_pow_ui(gpow.get_mpz_t(), mpz_class(g * g).get_mpz_t(), n);
    v = mpq_class(bpow) / mpq_class(gpow);
    for (unsigned j = 0; j < n; ++j) v *= mpq_class(az + bz * j);
    mpz_class nf;
    mpz_fac_ui(nf.get_mpz_t(), n);
    v /= mpq_class(nf);
    v.canonicalize();
    return {v.get_den() == 1, v};
}

mpq_class exact_series_coefficient(const HypSpec& spec, unsigned n) {
    mpq_class c(1);
    for (unsigned j = 0; j < n; ++j) {
        for (const Rational& r : spec.upper)
            c *= mpq_class(static_cast<long>(r.num) + static_cast<long>(j) * r.den, r.den);
        for (const Rational& r : spec.lower)
            c /= mpq_class(static_cast<long>(r.num) + static_cast<long>(j) * r.den, r.den);
        c /= mpq_class(j + 1);
    }
    c.canonicalize();
    return c;
}

}  // namespace hyproots
