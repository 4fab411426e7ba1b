#include "hyproots/fqpoly.hpp"

namespace hyproots {

void FqPoly::set_coeff(std::size_t i, const FqElem& v) {
    if (i >= c_.size()) c_.resize(i + 1, K_->zero());
    c_[i] = v;
    normalize();
}

FqPoly FqPoly::operator+(const FqPoly& g) const {
    std::vector<FqElem> r(std::max(c_.size(), g.c_.size()), K_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = K_->add(coeff(i), g.coeff(i));
    return FqPoly(*K_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& g) const {
    std::vector<FqElem> r(std::max(c_.size(), g.c_.size()), K_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = K_->sub(coeff(i), g.coeff(i));
    return FqPoly(*K_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& g) const {
    if (is_zero() || g.is_zero()) return FqPoly(*K_);
    std::vector<FqElem> r(c_.size() + g.c_.size() - 1, K_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (K_->is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            r[i + j] = K_->add(r[i + j], K_->mul(c_[i], g.c_[j]));
    }
    return FqPoly(*K_, std::move(r));
}

FqPoly FqPoly::scaled(const FqElem& s) const {
    std::vector<FqElem> r(c_.size(), K_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = K_->mul(c_[i], s);
    return FqPoly(*K_, std::move(r));
}

FqPoly FqPoly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<FqElem> r(c_.size() + k, K_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return FqPoly(*K_, std::move(r));
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly(*K_);
    std::vector<FqElem> r(c_.size() - 1, K_->zero());
    const PrimeField& F = K_->base();
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = K_->scale(c_[i], F.of_int(static_cast<std::int64_t>(i)));
    return FqPoly(*K_, std::move(r));
}

FqPoly FqPoly::truncated(std::size_t n) const {
    std::vector<FqElem> r(c_.begin(), c_.begin() + std::min(n, c_.size()));
    return FqPoly(*K_, std::move(r));
}

FqElem FqPoly::eval(const FqElem& x0) const {
    FqElem r = K_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = K_->add(K_->mul(r, x0), c_[i]);
    return r;
}

std::vector<Poly> FqPoly::slices() const {
    const std::uint32_t m = K_->ext_degree();
    std::vector<Poly> out;
    out.reserve(m);
    for (std::uint32_t s = 0; s < m; ++s) {
        std::vector<std::uint32_t> v(c_.size(), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i][s];
        out.emplace_back(K_->base(), std::move(v));
    }
    return out;
}

}  // namespace hyproots
