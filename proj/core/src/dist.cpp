#include "hyproots/dist.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "hyproots/parallel.hpp"

namespace hyproots {

Substitution Substitution::parse(const std::string& name) {
    if (name == "identity" || name == "id" || name == "x") return {SubstKind::identity, 1};
    if (name == "4x(1-x)" || name == "quad") return {SubstKind::quad_4x_1mx, 1};
    if (name == "1-x^2" || name == "1-x2") return {SubstKind::one_minus_x_sq, 1};
    if (name.size() > 2 && name[0] == 'x' && name[1] == '^') {
        std::uint64_t k = std::stoull(name.substr(2));
        if (k < 1 || k > 0x7fffffff) throw std::invalid_argument("Substitution: bad exponent");
        return {SubstKind::power_k, static_cast<std::uint32_t>(k)};
    }
    throw std::invalid_argument("Substitution: unknown kind \"" + name + "\"");
}

std::string Substitution::name() const {
    switch (kind) {
        case SubstKind::identity: return "identity";
        case SubstKind::quad_4x_1mx: return "4x(1-x)";
        case SubstKind::one_minus_x_sq: return "1-x^2";
        case SubstKind::power_k: return "x^" + std::to_string(k);
    }
    return "?";
}

std::uint32_t Substitution::apply(const PrimeField& F, std::uint32_t x) const {
    switch (kind) {
        case SubstKind::identity: return x;
        case SubstKind::quad_4x_1mx: return F.mul(F.mul(4 % F.p(), x), F.sub(1, x));
        case SubstKind::one_minus_x_sq: return F.sub(1, F.mul(x, x));
        case SubstKind::power_k: return F.pow(x, k);
    }
    return x;
}

Poly Substitution::as_poly(const PrimeField& F) const {
    switch (kind) {
        case SubstKind::identity: return Poly::x(F);
        case SubstKind::quad_4x_1mx: return Poly::of_ints(F, {0, 4, -4});
        case SubstKind::one_minus_x_sq: return Poly::of_ints(F, {1, 0, -1});
        case SubstKind::power_k: return Poly::x(F).pow(k);
    }
    return Poly::x(F);
}

RootDistribution distribution(const Poly& f, Substitution s, unsigned threads,
                              const std::string& spec_label) {
    const PrimeField& F = f.field();
    const std::uint32_t p = F.p();
    threads = effective_threads(threads);
    const auto t0 = std::chrono::steady_clock::now();

    // coefficients in Montgomery form, shared read-only
    std::vector<std::uint32_t> cm(f.coeffs().size());
    for (std::size_t i = 0; i < cm.size(); ++i) cm[i] = F.to_mont(f.coeffs()[i]);
    if (cm.empty()) cm.push_back(0);  // zero polynomial evaluates to 0

    std::vector<std::vector<std::uint32_t>> partial(threads);
    parallel_chunks(p, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
        std::vector<std::uint32_t>& local = partial[w];
        local.assign(p, 0);
        const std::uint32_t* c = cm.data();
        const std::size_t n = cm.size();
        for (std::uint64_t x = lo; x < hi; ++x) {
            const std::uint32_t a = s.apply(F, static_cast<std::uint32_t>(x));
            const std::uint32_t am = F.to_mont(a);
            std::uint32_t acc = c[n - 1];
            for (std::size_t i = n - 1; i-- > 0;) acc = F.add(F.mont_mul(acc, am), c[i]);
            ++local[F.from_mont(acc)];
        }
    });

    RootDistribution d;
    d.p = p;
    d.counts.assign(p, 0);
    for (const auto& local : partial)
        if (!local.empty())
            for (std::uint32_t m = 0; m < p; ++m) d.counts[m] += local[m];
    d.subst = s;
    d.spec = spec_label;
    d.degree = static_cast<std::uint64_t>(std::max(f.degree(), 0));
    d.threads = threads;
    d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return d;
}

DistSummary summarize(const RootDistribution& d) {
    DistSummary s;
    const double window = 2.0 * std::sqrt(static_cast<double>(d.p));
    s.within_hasse_window = true;
    const std::uint32_t p = d.p;
    for (std::uint32_t m = 0; m < p; ++m) {
        const std::uint32_t c = d.counts[m];
        ++s.histogram[c];
        if (c == 0) continue;
        const auto lift = static_cast<std::int64_t>(m > p / 2 ? static_cast<std::int64_t>(m) - p : m);
        const std::int64_t a = lift < 0 ? -lift : lift;
        if (a > s.max_abs_attained) s.max_abs_attained = a;
        if (static_cast<double>(a) > window) s.within_hasse_window = false;
        if (c > s.max_count) {
            s.max_count = c;
            s.argmax.clear();
        }
        if (c == s.max_count) s.argmax.push_back(m);
    }
    return s;
}

void write_distribution_csv(const RootDistribution& d, std::ostream& os) {
    os << "m,count\r\n";
    const std::int64_t half = (static_cast<std::int64_t>(d.p) - 1) / 2;
    for (std::int64_t m = -half; m <= half; ++m) {
        std::int64_t idx = m < 0 ? m + d.p : m;
        os << m << "," << d.counts[static_cast<std::size_t>(idx)] << "\r\n";
    }
}

void write_distribution_json(const RootDistribution& d, std::ostream& os,
                             const std::string& build_version) {
    nlohmann::json j;
    j["p"] = d.p;
    j["spec"] = d.spec;
    j["substitution"] = d.subst.name();
    j["degree"] = d.degree;
    j["seconds"] = d.seconds;
    j["threads"] = d.threads;
    j["build"] = build_version;
    DistSummary s = summarize(d);
    j["max_count"] = s.max_count;
    j["max_abs_attained"] = s.max_abs_attained;
    j["within_hasse_window"] = s.within_hasse_window;
    os << j.dump(2) << "\n";
}

}  // namespace hyproots
