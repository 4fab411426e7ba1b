// Root-count distributions: N_p(m) = #{x in F_p : f(sigma(x)) = m} for every
// residue m, computed by per-point Horner evaluation over chunked workers.

#ifndef HYPROOTS_DIST_HPP
#define HYPROOTS_DIST_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyproots/poly.hpp"

namespace hyproots {

enum class SubstKind { identity, quad_4x_1mx, one_minus_x_sq, power_k };

struct Substitution {
    SubstKind kind = SubstKind::identity;
    std::uint32_t k = 1;  // only for power_k

    static Substitution parse(const std::string& name);  // "identity", "4x(1-x)", "1-x^2", "x^k"
    std::string name() const;
    std::uint32_t apply(const PrimeField& F, std::uint32_t x) const;
    // the substitution as a polynomial, for cross-checks via composition
    Poly as_poly(const PrimeField& F) const;
};

struct RootDistribution {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> counts;  // counts[m] = N_p(m), sum = p
    Substitution subst;
    std::string spec;     // provenance label (e.g. the hypergeometric spec string)
    std::uint64_t degree = 0;
    double seconds = 0.0;
    unsigned threads = 1;
};

// threads = 0 picks hardware concurrency
RootDistribution distribution(const Poly& f, Substitution s, unsigned threads = 0,
                              const std::string& spec_label = "");

struct DistSummary {
    std::uint32_t max_count = 0;                    // M_p
    std::vector<std::uint32_t> argmax;              // residues attaining M_p
    std::map<std::uint32_t, std::uint32_t> histogram;  // count value -> #residues
    std::int64_t max_abs_attained = 0;              // max |signed lift| over attained m
    bool within_hasse_window = false;               // all attained m have |m| <= 2 sqrt(p)
};

DistSummary summarize(const RootDistribution& d);

// CSV per RFC 4180 (CRLF line endings), header "m,count", rows ordered by the
// signed lift m = -(p-1)/2 .. (p-1)/2. Byte-stable for fixed input.
void write_distribution_csv(const RootDistribution& d, std::ostream& os);

// JSON sidecar with provenance and timing metadata.
void write_distribution_json(const RootDistribution& d, std::ostream& os,
                             const std::string& build_version);

}  // namespace hyproots

#endif
