#include "hyproots/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyproots {

Poly Poly::of_ints(const PrimeField& F, std::initializer_list<std::int64_t> v) {
    std::vector<std::uint32_t> c;
    c.reserve(v.size());
    for (std::int64_t x : v) c.push_back(F.of_int(x));
    return Poly(F, std::move(c));
}

Poly Poly::operator+(const Poly& g) const {
    std::vector<std::uint32_t> r(std::max(c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->add(coeff(i), g.coeff(i));
    return Poly(*F_, std::move(r));
}

Poly Poly::operator-(const Poly& g) const {
    std::vector<std::uint32_t> r(std::max(c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->sub(coeff(i), g.coeff(i));
    return Poly(*F_, std::move(r));
}

Poly Poly::operator*(const Poly& g) const {
    if (is_zero() || g.is_zero()) return Poly(*F_);
    const std::uint64_t p = F_->p();
    const std::uint64_t cap = ~std::uint64_t(0) - (p - 1) * (p - 1);
    std::vector<std::uint64_t> acc(c_.size() + g.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const std::uint64_t a = c_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) {
            if (acc[i + j] > cap) acc[i + j] %= p;
            acc[i + j] += a * g.c_[j];
        }
    }
    std::vector<std::uint32_t> r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i] % p);
    return Poly(*F_, std::move(r));
}

Poly Poly::scaled(std::uint32_t s) const {
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], s);
    return Poly(*F_, std::move(r));
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<std::uint32_t> r(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
    return Poly(*F_, std::move(r));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = Poly::constant(*F_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& g) const {
    if (g.is_zero()) throw std::domain_error("Poly::divrem: division by zero polynomial");
    if (degree() < g.degree()) return {Poly(*F_), *this};
    const std::int64_t dg = g.degree();
    std::vector<std::uint32_t> rem = c_;
    std::vector<std::uint32_t> quo(c_.size() - dg, 0);
    const std::uint32_t lg = F_->inv(g.leading());
    for (std::int64_t i = degree(); i >= dg; --i) {
        std::uint32_t q = F_->mul(rem[static_cast<std::size_t>(i)], lg);
        if (q == 0) continue;
        quo[static_cast<std::size_t>(i - dg)] = q;
        for (std::int64_t j = 0; j <= dg; ++j) {
            auto k = static_cast<std::size_t>(i - dg + j);
            rem[k] = F_->sub(rem[k], F_->mul(q, g.coeff(static_cast<std::size_t>(j))));
        }
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Poly(*F_, std::move(quo)), Poly(*F_, std::move(rem))};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(*F_);
    std::vector<std::uint32_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = F_->mul(c_[i], F_->of_int(static_cast<std::int64_t>(i)));
    return Poly(*F_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return scaled(F_->inv(leading()));
}

std::uint32_t Poly::eval(std::uint32_t x0) const {
    std::uint32_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x0), c_[i]);
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r(*F_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + Poly::constant(*F_, c_[i]);
    if (c_.empty()) return Poly(*F_);
    return r;
}

Poly Poly::reversed(std::size_t K) const {
    if (degree() > static_cast<int>(K))
        throw std::invalid_argument("Poly::reversed: K below degree");
    std::vector<std::uint32_t> r(K + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[K - i] = c_[i];
    return Poly(*F_, std::move(r));
}

Poly poly_gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = f.divrem(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    if (m.degree() < 1) throw std::invalid_argument("poly_powmod: constant modulus");
    const PrimeField& F = base.field();
    Poly r = Poly::constant(F, 1);
    Poly b = base.divrem(m).second;
    while (e) {
        if (e & 1) r = (r * b).divrem(m).second;
        b = (b * b).divrem(m).second;
        e >>= 1;
    }
    return r;
}

namespace {

// f with f' == 0 is a polynomial in x^p; over the prime field its p-th root
// just compresses exponents (c^p = c for c in F_p).
Poly pth_root(const Poly& f) {
    const std::uint32_t p = f.field().p();
    std::vector<std::uint32_t> r(static_cast<std::size_t>(f.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.coeff(i * p);
    return Poly(f.field(), std::move(r));
}

void squarefree_rec(const Poly& f, int outer, std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() <= 0) return;
    const int p = static_cast<int>(f.field().p());
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_rec(pth_root(f), outer * p, out);
        return;
    }
    Poly c = poly_gcd(f, fp);
    Poly w = f.divrem(c).first;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = w.divrem(y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * outer);
        c = c.divrem(y).first;
        w = std::move(y);
        ++i;
    }
    // what remains of c is the p-th-power part
    if (c.degree() > 0) squarefree_rec(pth_root(c), outer * p, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_multiplicities(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_multiplicities: zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    squarefree_rec(f, 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

bool has_twelfth_power_factor(const Poly& f) {
    for (const auto& [part, mult] : squarefree_multiplicities(f))
        if (mult >= 12 && part.degree() >= 1) return true;
    return false;
}

}  // namespace hyproots
