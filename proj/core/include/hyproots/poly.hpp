// Dense univariate polynomials over F_p.
//
// Normalized form: the highest-index coefficient is nonzero; the zero
// polynomial is the empty vector and has degree() == -1. Operations are pure
// and polynomials are safe to share across threads.

#ifndef HYPROOTS_POLY_HPP
#define HYPROOTS_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hyproots/field.hpp"

namespace hyproots {

class Poly {
  public:
    explicit Poly(const PrimeField& F) : F_(&F) {}
    Poly(const PrimeField& F, std::vector<std::uint32_t> coeffs)
        : F_(&F), c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(const PrimeField& F) { return Poly(F); }
    static Poly constant(const PrimeField& F, std::uint32_t v) {
        return Poly(F, {v % F.p()});
    }
    static Poly x(const PrimeField& F) { return Poly(F, {0, 1}); }
    // convenience: build from small signed ints (index = exponent)
    static Poly of_ints(const PrimeField& F, std::initializer_list<std::int64_t> v);

    const PrimeField& field() const { return *F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool operator==(const Poly& g) const { return c_ == g.c_; }

    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly scaled(std::uint32_t s) const;
    Poly shifted(std::size_t k) const;      // * x^k
    Poly pow(std::uint64_t e) const;

    // quotient and remainder, g != 0
    std::pair<Poly, Poly> divrem(const Poly& g) const;

    Poly derivative() const;
    Poly monic() const;                      // 0 stays 0

    std::uint32_t eval(std::uint32_t x0) const;
    Poly compose(const Poly& inner) const;   // this(inner(x)), schoolbook

    // coefficient reversal: y^K * f(1/y); requires K >= degree
    Poly reversed(std::size_t K) const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const PrimeField* F_;
    std::vector<std::uint32_t> c_;
};

// monic gcd; gcd(0,0) = 0
Poly poly_gcd(Poly f, Poly g);

// base^e mod m by square-and-multiply; m nonconstant
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m);

// Squarefree decomposition in characteristic p (Yun with p-th-power descent):
// f = lc * prod A_i^i with the A_i monic, squarefree, pairwise coprime.
// Returned as (A_i, i) pairs with nonconstant A_i, ascending i.
std::vector<std::pair<Poly, int>> squarefree_multiplicities(const Poly& f);

// true iff some nonconstant g has g^12 | f
bool has_twelfth_power_factor(const Poly& f);

}  // namespace hyproots

#endif
