// F_{p^m} as F_p[t] modulo a fixed irreducible polynomial.
//
// The modulus is chosen deterministically: among monic degree-m polynomials
// t^m + c_{m-1} t^{m-1} + ... + c_0, the one whose coefficient word
// c_{m-1} p^{m-1} + ... + c_0 is smallest and which passes the Rabin
// irreducibility test. Results are therefore reproducible across runs.

#ifndef HYPROOTS_EXTFIELD_HPP
#define HYPROOTS_EXTFIELD_HPP

#include <cstdint>
#include <vector>

#include "hyproots/field.hpp"
#include "hyproots/poly.hpp"

namespace hyproots {

// element of F_{p^m}: m residues, little-endian in t
using FqElem = std::vector<std::uint32_t>;

class ExtField {
  public:
    ExtField(std::uint32_t p, std::uint32_t m);

    const PrimeField& base() const { return base_; }
    std::uint32_t ext_degree() const { return m_; }
    std::uint64_t q() const;  // p^m (throws if it overflows 64 bits)
    const Poly& modulus() const { return modulus_; }

    FqElem zero() const { return FqElem(m_, 0); }
    FqElem one() const;
    FqElem from_base(std::uint32_t a) const;
    FqElem gen() const;  // the class t (requires m >= 2)

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem scale(const FqElem& a, std::uint32_t s) const;
    FqElem inv(const FqElem& a) const;  // throws ZeroInverse
    FqElem pow(FqElem a, std::uint64_t e) const;
    FqElem frobenius(const FqElem& a) const { return pow(a, base_.p()); }

    bool is_zero(const FqElem& a) const;
    bool in_prime_subfield(const FqElem& a) const;

    // a primitive element (generator of F_q^*); deterministic search
    FqElem primitive_element() const;

  private:
    PrimeField base_;
    std::uint32_t m_;
    Poly modulus_;
};

bool poly_is_irreducible(const Poly& f);

}  // namespace hyproots

#endif
