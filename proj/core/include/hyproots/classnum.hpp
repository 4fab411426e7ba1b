// Hurwitz-Kronecker class numbers H(N) by reduced-form enumeration, class
// numbers h(-p), and the Deuring-style comparison of root counts against
// H(4p - m^2).
//
// H(N) counts SL_2(Z)-classes of positive definite binary quadratic forms
// (a,b,c) of discriminant b^2-4ac = -N, primitive or not, with forms
// equivalent to a(x^2+y^2) weighted 1/2 and to a(x^2+xy+y^2) weighted 1/3.
// Values are returned as the integer 12*H(N).

#ifndef HYPROOTS_CLASSNUM_HPP
#define HYPROOTS_CLASSNUM_HPP

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "hyproots/field.hpp"

namespace hyproots {

struct HurwitzValue {
    std::uint64_t N = 0;
    std::uint64_t twelve_h = 0;  // 12*H(N); 0 when N = 1,2 mod 4
};

// reduced-form enumeration: b from N mod 2 up, 3b^2 <= N, divisor split of (N+b^2)/4
HurwitzValue hurwitz(std::uint64_t N);

// independent oracle with a different loop structure: outer loop over a,
// inner over b in [-a, a], reduction tie-breaks applied on the fly
std::uint64_t hurwitz_bruteforce_twelve(std::uint64_t N);

// class number h(-p) for primes p = 3 mod 4, p > 3 (fundamental discriminant)
std::uint64_t h_fundamental(std::uint32_t p);

// thread-safe insert-only memo for H lookups in sweeps
class HurwitzTable {
  public:
    std::uint64_t twelve_h(std::uint64_t N);

  private:
    std::mutex mu_;
    std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

struct DeuringRow {
    std::int64_t m = 0;          // signed residue, |m| <= 2 sqrt(p)
    std::uint32_t roots = 0;     // N_p(m) for the family's truncation
    std::uint64_t twelve_h = 0;  // 12*H(4p - m^2)
};

struct DeuringReport {
    std::uint32_t p = 0;
    std::vector<DeuringRow> rows;
    std::uint32_t max_roots = 0;        // M_p over all residues
    std::uint64_t max_twelve_h = 0;     // 12*H_p over the Hasse window
    double ratio = 0.0;                 // M_p / H_p
    double x_p = 0.0;                   // sqrt(p) log p (log log p)^2
    std::uint32_t bound_factor = 0;     // family constant C with M_p <= C*H_p
    bool within_bound = false;          // M_p <= C * H_p
    bool support_ok = false;            // N_p(m) = 0 outside the Hasse window
};

// family_bound: the per-family isomorphism-class multiplicity constant
// (6 for the Legendre family). The root counts come from the family's
// hypergeometric truncation with the identity substitution.
DeuringReport deuring_report(std::uint32_t p, const std::vector<std::uint32_t>& counts,
                             std::uint32_t family_bound, HurwitzTable* memo = nullptr);

}  // namespace hyproots

#endif
