// Arithmetic in the prime field F_p for odd primes p < 2^31.
//
// Elements are canonical residues in [0, p) held in uint32_t. A Montgomery
// domain (R = 2^32) is exposed for hot loops; everything that crosses a
// module boundary is a canonical residue.

#ifndef HYPROOTS_FIELD_HPP
#define HYPROOTS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyproots {

bool is_prime(std::uint64_t n);
std::uint32_t next_prime(std::uint32_t n);  // least prime > n

class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 3 || p >= (1u << 31) || !is_prime(p))
            throw std::invalid_argument("PrimeField: " + std::to_string(p) +
                                        " is not an odd prime below 2^31");
        // -p^{-1} mod 2^32 by Newton iteration (p odd)
        std::uint32_t inv = p;
        for (int i = 0; i < 4; ++i) inv *= 2 - p * inv;
        ninv_ = ~inv + 1;
        r1_ = static_cast<std::uint32_t>((std::uint64_t(1) << 32) % p);
        r2_ = static_cast<std::uint32_t>((static_cast<unsigned __int128>(1) << 64) % p);
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t half_degree() const { return (p_ - 1) / 2; }  // D = (p-1)/2

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = mont_one(), m = to_mont(a);
        while (e) {
            if (e & 1) r = mont_mul(r, m);
            m = mont_mul(m, m);
            e >>= 1;
        }
        return from_mont(r);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("ZeroInverse");
        return pow(a, p_ - 2);
    }

    // reduce a signed integer
    std::uint32_t of_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t of_fraction(std::int64_t num, std::int64_t den) const {
        return mul(of_int(num), inv(of_int(den)));
    }

    // Legendre symbol via Euler's criterion: a^D mapped to {-1, 0, +1}.
    int legendre(std::uint32_t a) const {
        if (a % p_ == 0) return 0;
        std::uint32_t t = pow(a % p_, half_degree());
        return t == 1 ? 1 : -1;
    }

    // representative in (-p/2, p/2)
    std::int64_t signed_lift(std::uint32_t a) const {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    // ---- Montgomery domain (R = 2^32) ----
    std::uint32_t mont_one() const { return r1_; }
    std::uint32_t to_mont(std::uint32_t a) const { return mont_mul(a, r2_); }
    std::uint32_t from_mont(std::uint32_t a) const { return mont_mul(a, 1); }
    std::uint32_t mont_mul(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t t = std::uint64_t(a) * b;
        std::uint32_t m = static_cast<std::uint32_t>(t) * ninv_;
        std::uint32_t u = static_cast<std::uint32_t>((t + std::uint64_t(m) * p_) >> 32);
        if (u >= p_) u -= p_;
        return u;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    std::uint32_t p_;
    std::uint32_t ninv_;  // -p^{-1} mod 2^32
    std::uint32_t r1_;    // 2^32 mod p
    std::uint32_t r2_;    // 2^64 mod p
};

// Quadratic-character lookup table: chi[v] in {-1, 0, +1} for v in [0, p).
// O(p) to build by marking squares; shared read-only across threads.
class QuadCharTable {
  public:
    explicit QuadCharTable(const PrimeField& F);
    int operator()(std::uint32_t v) const { return chi_[v]; }
    const PrimeField& field() const { return *F_; }

  private:
    const PrimeField* F_;
    std::vector<signed char> chi_;
};

}  // namespace hyproots

#endif
