#include "hyproots/extfield.hpp"

#include <stdexcept>

namespace hyproots {

// Rabin test: f of degree m is irreducible over F_p iff x^{p^m} = x mod f and
// gcd(x^{p^{m/l}} - x, f) = 1 for every prime l | m.
bool poly_is_irreducible(const Poly& f) {
    const PrimeField& F = f.field();
    const int m = f.degree();
    if (m < 1) return false;
    if (m == 1) return true;
    Poly x = Poly::x(F);

    auto x_to_p_power = [&](int k) {  // x^{p^k} mod f
        Poly r = x;
        for (int i = 0; i < k; ++i) r = poly_powmod(r, F.p(), f);
        return r;
    };

    std::vector<int> prime_divs;
    int mm = m;
    for (int l = 2; l * l <= mm; ++l)
        if (mm % l == 0) {
            prime_divs.push_back(l);
            while (mm % l == 0) mm /= l;
        }
    if (mm > 1) prime_divs.push_back(mm);

    for (int l : prime_divs) {
        Poly g = x_to_p_power(m / l) - x;
        if (poly_gcd(g, f).degree() != 0) return false;
    }
    return x_to_p_power(m) == x.divrem(f).second;
}

namespace {

Poly find_modulus(const PrimeField& F, std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("ExtField: degree must be >= 1");
    if (m == 1) return Poly(F, {0, 1});  // t
    // coefficient word (c_{m-1}, ..., c_0) in ascending order
    std::vector<std::uint32_t> low(m, 0);
    const std::uint32_t p = F.p();
    for (;;) {
        std::vector<std::uint32_t> c(low.rbegin(), low.rend());
        c.push_back(1);
        Poly f(F, std::move(c));
        if (f.degree() == static_cast<int>(m) && poly_is_irreducible(f)) return f;
        // increment the word, least-significant digit = c_0 = low.back()... low
        // is stored (c_{m-1}, ..., c_0), so increment from the end
        std::size_t i = m;
        while (i-- > 0) {
            if (++low[i] < p) break;
            low[i] = 0;
            if (i == 0) throw std::logic_error("ExtField: no irreducible found");
        }
    }
}

}  // namespace

ExtField::ExtField(std::uint32_t p, std::uint32_t m)
    : base_(p), m_(m), modulus_(find_modulus(base_, m)) {
    if (m < 1) throw std::invalid_argument("ExtField: degree must be >= 1");
}

std::uint64_t ExtField::q() const {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (r > ~std::uint64_t(0) / base_.p()) throw std::overflow_error("ExtField::q overflow");
        r *= base_.p();
    }
    return r;
}

FqElem ExtField::one() const { return from_base(1); }

FqElem ExtField::from_base(std::uint32_t a) const {
    FqElem r(m_, 0);
    r[0] = a % base_.p();
    return r;
}

FqElem ExtField::gen() const {
    if (m_ < 2) throw std::logic_error("ExtField::gen: prime field has no t");
    FqElem r(m_, 0);
    r[1] = 1;
    return r;
}

FqElem ExtField::add(const FqElem& a, const FqElem& b) const {
    FqElem r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

FqElem ExtField::sub(const FqElem& a, const FqElem& b) const {
    FqElem r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

FqElem ExtField::neg(const FqElem& a) const {
    FqElem r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) r[i] = base_.neg(a[i]);
    return r;
}

FqElem ExtField::scale(const FqElem& a, std::uint32_t s) const {
    FqElem r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) r[i] = base_.mul(a[i], s);
    return r;
}

FqElem ExtField::mul(const FqElem& a, const FqElem& b) const {
    // schoolbook product then reduction by the monic modulus
    std::vector<std::uint32_t> t(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            t[i + j] = base_.add(t[i + j], base_.mul(a[i], b[j]));
    }
    for (std::size_t d = t.size(); d-- > m_;) {
        std::uint32_t lead = t[d];
        if (lead == 0) continue;
        t[d] = 0;
        for (std::uint32_t j = 0; j < m_; ++j) {
            std::size_t k = d - m_ + j;
            t[k] = base_.sub(t[k], base_.mul(lead, modulus_.coeff(j)));
        }
    }
    t.resize(m_);
    return t;
}

bool ExtField::is_zero(const FqElem& a) const {
    for (std::uint32_t v : a)
        if (v) return false;
    return true;
}

bool ExtField::in_prime_subfield(const FqElem& a) const {
    for (std::uint32_t i = 1; i < m_; ++i)
        if (a[i]) return false;
    return true;
}

FqElem ExtField::pow(FqElem a, std::uint64_t e) const {
    FqElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FqElem ExtField::inv(const FqElem& a) const {
    if (is_zero(a)) throw std::domain_error("ZeroInverse");
    // extended Euclid in F_p[t] against the modulus
    Poly r0 = modulus_, r1(base_, std::vector<std::uint32_t>(a));
    Poly s0 = Poly::zero(base_), s1 = Poly::constant(base_, 1);
    while (r1.degree() > 0) {
        auto [q, r2] = r0.divrem(r1);
        Poly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant (modulus irreducible, a != 0)
    Poly out = s1.scaled(base_.inv(r1.coeff(0)));
    FqElem res(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) res[i] = out.coeff(i);
    return res;
}

FqElem ExtField::primitive_element() const {
    const std::uint64_t n = q() - 1;
    std::vector<std::uint64_t> prime_divs;
    std::uint64_t mm = n;
    for (std::uint64_t l = 2; l * l <= mm; ++l)
        if (mm % l == 0) {
            prime_divs.push_back(l);
            while (mm % l == 0) mm /= l;
        }
    if (mm > 1) prime_divs.push_back(mm);

    // enumerate candidates in the same coefficient-word order as the modulus search
    for (std::uint64_t w = 1;; ++w) {
        FqElem a(m_);
        std::uint64_t v = w;
        for (std::uint32_t i = 0; i < m_; ++i) {
            a[i] = static_cast<std::uint32_t>(v % base_.p());
            v /= base_.p();
        }
        if (v != 0) throw std::logic_error("ExtField: no primitive element found");
        bool ok = !is_zero(a);
        for (std::uint64_t l : prime_divs)
            if (ok && is_zero(sub(pow(a, n / l), one()))) ok = false;
        if (ok) return a;
    }
}

}  // namespace hyproots
