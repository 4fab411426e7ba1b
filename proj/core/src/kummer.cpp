#include "hyproots/kummer.hpp"

#include <cmath>
#include <stdexcept>

#include "hyproots/dist.hpp"
#include "hyproots/parallel.hpp"

namespace hyproots {

KummerTruncation kummer_truncate(const KummerSpec& spec) {
    const ExtField& K = *spec.K;
    const PrimeField& F = K.base();
    const std::uint64_t p = F.p();
    if (K.in_prime_subfield(spec.alpha) && !spec.beta_ext)
        throw std::invalid_argument("kummer_truncate: alpha must lie outside F_p");
    if (spec.beta_ext && K.in_prime_subfield(*spec.beta_ext)) {
        // beta in F_p through the extension embedding is the rational case
        throw std::invalid_argument("kummer_truncate: extension beta lies in F_p; pass it as a rational");
    }
    if (spec.beta_ext &&
        (K.in_prime_subfield(spec.alpha) ||
         K.in_prime_subfield(K.sub(spec.alpha, *spec.beta_ext))))
        throw std::invalid_argument("kummer_truncate: k=1 mode needs alpha, alpha-beta outside F_p");

    // binding constraint among alpha (never binds when alpha is outside F_p),
    // beta, and the n! bound p-1
    KummerTruncation t{FqPoly(K)};
    std::uint64_t n_star = p - 1;
    t.omega = 1;
    t.a = 1;
    t.b = 1;
    if (K.in_prime_subfield(spec.alpha)) {
        const std::uint32_t a0 = spec.alpha[0];
        const std::uint64_t n_alpha = a0 == 0 ? 0 : p - a0;
        if (n_alpha < n_star) {
            n_star = n_alpha;
            t.omega = 1;
            t.a = a0;
            t.b = 1;
        }
    }
    if (spec.beta_rat) {
        const Rational& r = *spec.beta_rat;
        if (r.den % p == 0) throw std::invalid_argument("BadPrime: p divides beta denominator");
        std::uint64_t n_beta;
        std::uint32_t omega = 1;
        if (r.den == 1) {
            n_beta = p - r.num;
        } else {
            std::uint32_t pinv = 0;
            for (std::uint32_t u = 1; u < r.den; ++u)
                if (static_cast<std::uint64_t>(u) * (p % r.den) % r.den == 1) {
                    pinv = u;
                    break;
                }
            omega = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r.num) * pinv % r.den);
            n_beta = (static_cast<std::uint64_t>(omega) * p - r.num) / r.den;
        }
        if (n_beta < n_star) {
            n_star = n_beta;
            t.omega = omega;
            t.a = r.num;
            t.b = r.den;
        }
    }
    t.n_star = n_star;
    t.k = t.b;  // the natural change of variable; b = 1 when p-1 binds

    // coefficients c_n = (alpha)_n / ((beta)_n n!)
    const FqElem beta = spec.beta_ext
                            ? *spec.beta_ext
                            : K.from_base(F.of_fraction(spec.beta_rat->num, spec.beta_rat->den));
    std::vector<FqElem> coeffs(static_cast<std::size_t>(t.k) * n_star + 1, K.zero());
    FqElem c = K.one();
    for (std::uint64_t n = 0;; ++n) {
        coeffs[static_cast<std::size_t>(t.k) * n] = c;
        if (n == n_star) break;
        const FqElem num = K.add(spec.alpha, K.from_base(F.of_int(static_cast<std::int64_t>(n % p))));
        const FqElem den = K.scale(K.add(beta, K.from_base(F.of_int(static_cast<std::int64_t>(n % p)))),
                                   F.of_int(static_cast<std::int64_t>((n + 1) % p)));
        c = K.mul(c, K.mul(num, K.inv(den)));
    }
    t.eta = FqPoly(K, std::move(coeffs));
    if (t.eta.degree() != static_cast<int>(t.k * n_star))
        throw std::logic_error("kummer_truncate: leading coefficient vanished (internal)");
    return t;
}

FqPoly de_residual(const KummerSpec& spec, const KummerTruncation& t) {
    const ExtField& K = *spec.K;
    const PrimeField& F = K.base();
    const std::uint32_t b = t.k;
    const FqElem beta = spec.beta_ext
                            ? *spec.beta_ext
                            : K.from_base(F.of_fraction(spec.beta_rat->num, spec.beta_rat->den));

    const FqPoly& y = t.eta;
    const FqPoly y1 = y.derivative();
    const FqPoly y2 = y1.derivative();

    // (x/b) y''
    FqPoly res = y2.shifted(1).scaled(K.from_base(F.of_fraction(1, b)));
    // [(beta - (b-1)/b) - x^b] y'
    const FqElem c0 = K.sub(beta, K.from_base(F.of_fraction(static_cast<std::int64_t>(b) - 1, b)));
    res = res + y1.scaled(c0) - y1.shifted(b);
    // - b x^{b-1} alpha y
    res = res - y.shifted(b - 1).scaled(K.scale(spec.alpha, F.of_int(b)));

    // reduce mod x^{p - a - 1}
    const std::uint64_t bound = F.p() - t.a - 1;
    return res.truncated(bound);
}

RootCountReport kummer_root_count(const KummerSpec& spec, const KummerTruncation& t,
                                  unsigned threads) {
    const ExtField& K = *spec.K;
    const PrimeField& F = K.base();
    const std::uint32_t p = F.p();

    // fold exponents by x^p = x so every slice has degree < p, then count
    // x where all slices vanish: evaluate slice 0 everywhere, later slices
    // only at surviving points
    std::vector<Poly> sl = t.eta.slices();
    std::vector<std::vector<std::uint32_t>> folded;
    for (const Poly& s : sl) {
        std::vector<std::uint32_t> v(std::min<std::size_t>(s.coeffs().size(), p), 0);
        v.resize(p, 0);
        for (int i = 0; i <= s.degree(); ++i) {
            const auto e = static_cast<std::uint64_t>(i);
            const std::size_t r = e < p ? e : (e - 1) % (p - 1) + 1;
            v[r] = F.add(v[r], s.coeff(e));
        }
        folded.push_back(std::move(v));
    }

    RootCountReport rep;
    rep.degree = static_cast<std::uint64_t>(std::max(t.eta.degree(), 0));

    threads = effective_threads(threads);
    std::vector<std::uint64_t> partial(threads, 0);
    // Montgomery-form slice 0
    const std::vector<std::uint32_t>& s0 = folded[0];
    std::vector<std::uint32_t> s0m(s0.size());
    for (std::size_t i = 0; i < s0.size(); ++i) s0m[i] = F.to_mont(s0[i]);

    std::vector<std::vector<std::uint32_t>> survivors(threads);
    parallel_chunks(p, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
        const std::uint32_t* c = s0m.data();
        const std::size_t n = s0m.size();
        for (std::uint64_t x = lo; x < hi; ++x) {
            const std::uint32_t xm = F.to_mont(static_cast<std::uint32_t>(x));
            std::uint32_t acc = c[n - 1];
            for (std::size_t i = n - 1; i-- > 0;) acc = F.add(F.mont_mul(acc, xm), c[i]);
            if (F.from_mont(acc) == 0) survivors[w].push_back(static_cast<std::uint32_t>(x));
        }
    });

    std::uint64_t count = 0;
    for (const auto& sv : survivors) {
        for (std::uint32_t x : sv) {
            bool all_zero = true;
            for (std::size_t s = 1; s < folded.size() && all_zero; ++s) {
                const auto& cs = folded[s];
                std::uint32_t acc = 0;
                for (std::size_t i = cs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), cs[i]);
                all_zero = acc == 0;
            }
            if (all_zero) ++count;
        }
    }
    rep.count = count;
    rep.p_to_6_7 = std::pow(static_cast<double>(p), 6.0 / 7.0);
    rep.ratio = rep.count / rep.p_to_6_7;
    return rep;
}

StepanovParams stepanov_parameters(std::uint64_t p, double delta) {
    StepanovParams s;
    const double pd = static_cast<double>(p);
    s.A = delta * std::floor(std::pow(pd, 2.0 / 7.0));
    s.B = delta * std::floor(std::pow(pd, 1.0 / 7.0));
    s.C = s.B;
    s.D = delta * delta * delta * std::floor(std::pow(pd, 2.0 / 7.0));
    s.bound = (s.A + (pd - 1) * s.B + pd * s.C) / s.D;
    return s;
}

}  // namespace hyproots
