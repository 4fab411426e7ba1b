#include "hyproots/field.hpp"

namespace hyproots {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; the bases {2,3,5,7,11,13,17,23,31,37} cover all n < 3.3e24,
// far beyond the 2^31 range this library accepts.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 23ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 23ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint32_t next_prime(std::uint32_t n) {
    std::uint64_t c = std::uint64_t(n) + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    if (c >= (1ull << 31)) throw std::overflow_error("next_prime: out of supported range");
    return static_cast<std::uint32_t>(c);
}

QuadCharTable::QuadCharTable(const PrimeField& F) : F_(&F), chi_(F.p(), -1) {
    chi_[0] = 0;
    std::uint32_t p = F.p();
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) chi_[x * x % p] = 1;
}

}  // namespace hyproots
