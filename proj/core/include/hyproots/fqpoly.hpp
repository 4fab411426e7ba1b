// Dense univariate polynomials with coefficients in F_{p^m}.
// Only what the Kummer machinery needs: ring ops, formal derivative,
// truncation, and decomposition into F_p coefficient slices.

#ifndef HYPROOTS_FQPOLY_HPP
#define HYPROOTS_FQPOLY_HPP

#include <vector>

#include "hyproots/extfield.hpp"

namespace hyproots {

class FqPoly {
  public:
    explicit FqPoly(const ExtField& K) : K_(&K) {}
    FqPoly(const ExtField& K, std::vector<FqElem> coeffs) : K_(&K), c_(std::move(coeffs)) {
        normalize();
    }

    const ExtField& field() const { return *K_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FqElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K_->zero(); }

    void set_coeff(std::size_t i, const FqElem& v);

    FqPoly operator+(const FqPoly& g) const;
    FqPoly operator-(const FqPoly& g) const;
    FqPoly operator*(const FqPoly& g) const;
    FqPoly scaled(const FqElem& s) const;
    FqPoly shifted(std::size_t k) const;
    FqPoly derivative() const;
    FqPoly truncated(std::size_t n) const;  // mod x^n

    FqElem eval(const FqElem& x0) const;

    bool operator==(const FqPoly& g) const { return c_ == g.c_; }

    // slice i = the F_p polynomial of t^i components; for x in F_p,
    // f(x) = sum_i slice_i(x) t^i, so f(x) = 0 iff every slice vanishes at x.
    std::vector<Poly> slices() const;

  private:
    void normalize() {
        while (!c_.empty() && K_->is_zero(c_.back())) c_.pop_back();
    }
    const ExtField* K_;
    std::vector<FqElem> c_;
};

}  // namespace hyproots

#endif
