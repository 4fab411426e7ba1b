#include "hyproots/classnum.hpp"

#include <cmath>
#include <stdexcept>

namespace hyproots {

HurwitzValue hurwitz(std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("hurwitz: N must be positive");
    HurwitzValue v{N, 0};
    if (N % 4 == 1 || N % 4 == 2) return v;
    // reduced forms (a,b,c): b^2 - 4ac = -N, |b| <= a <= c, b >= 0 if |b| = a or a = c.
    // Enumerate b >= 0 with matching parity, split M = (N + b^2)/4 = a*c.
    for (std::uint64_t b = N % 2; 3 * b * b <= N; b += 2) {
        const std::uint64_t M = (N + b * b) / 4;
        for (std::uint64_t a = b ? b : 1; a * a <= M; ++a) {
            if (M % a) continue;
            const std::uint64_t c = M / a;
            std::uint64_t w;
            if (a == b && a == c) w = 4;          // a(x^2+xy+y^2), weight 1/3
            else if (b == 0 && a == c) w = 6;     // a(x^2+y^2), weight 1/2
            else if (b == 0 || a == b || a == c) w = 12;  // only +b reduced
            else w = 24;                           // +-b both reduced
            v.twelve_h += w;
        }
    }
    return v;
}

std::uint64_t hurwitz_bruteforce_twelve(std::uint64_t N) {
    if (N % 4 == 1 || N % 4 == 2) return 0;
    std::uint64_t s = 0;
    for (std::uint64_t a = 1; 4 * a * a <= N + a * a; ++a) {  // a <= sqrt((N+b^2)/4) with |b|<=a => 3a^2 <= N
        if (3 * a * a > N) break;
        for (std::int64_t b = -static_cast<std::int64_t>(a); b <= static_cast<std::int64_t>(a); ++b) {
            const std::uint64_t b2 = static_cast<std::uint64_t>(b * b);
            if ((N + b2) % (4 * a)) continue;
            const std::uint64_t c = (N + b2) / (4 * a);
            if (c < a) continue;
            const bool boundary = (static_cast<std::uint64_t>(b < 0 ? -b : b) == a) || (a == c);
            if (boundary && b < 0) continue;  // tie-break: b >= 0 on the boundary
            if (a == c && static_cast<std::uint64_t>(b) == a && b >= 0) s += 4;
            else if (b == 0 && a == c) s += 6;
            else s += 12;
        }
    }
    return s;
}

std::uint64_t h_fundamental(std::uint32_t p) {
    if (p % 4 != 3 || p <= 3 || !is_prime(p))
        throw std::invalid_argument("h_fundamental: need a prime p = 3 mod 4, p > 3");
    // all forms of discriminant -p are primitive; weights are trivial for p > 3
    std::uint64_t h = 0;
    for (std::uint64_t b = 1; 3 * b * b <= p; b += 2) {
        const std::uint64_t M = (p + b * b) / 4;
        for (std::uint64_t a = b; a * a <= M; ++a) {
            if (M % a) continue;
            const std::uint64_t c = M / a;
            h += (a == b || a == c) ? 1 : 2;
        }
    }
    return h;
}

std::uint64_t HurwitzTable::twelve_h(std::uint64_t N) {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(N);
        if (it != memo_.end()) return it->second;
    }
    const std::uint64_t v = hurwitz(N).twelve_h;
    std::lock_guard<std::mutex> lk(mu_);
    memo_.emplace(N, v);
    return v;
}

DeuringReport deuring_report(std::uint32_t p, const std::vector<std::uint32_t>& counts,
                             std::uint32_t family_bound, HurwitzTable* memo) {
    if (counts.size() != p) throw std::invalid_argument("deuring_report: counts size != p");
    DeuringReport r;
    r.p = p;
    r.bound_factor = family_bound;
    const auto window = static_cast<std::int64_t>(2.0 * std::sqrt(static_cast<double>(p)));
    r.support_ok = true;
    HurwitzTable local;
    HurwitzTable& table = memo ? *memo : local;

    for (std::int64_t m = -window; m <= window; ++m) {
        // 4p - m^2 > 0 always here: m^2 <= 4p and m^2 = 4p would need p = (m/2)^2
        const std::uint64_t N = 4ull * p - static_cast<std::uint64_t>(m * m);
        if (N == 0) throw std::logic_error("deuring_report: m^2 = 4p impossible for prime p");
        DeuringRow row;
        row.m = m;
        row.roots = counts[static_cast<std::size_t>(m < 0 ? m + p : m)];
        row.twelve_h = table.twelve_h(N);
        if (row.twelve_h > r.max_twelve_h) r.max_twelve_h = row.twelve_h;
        r.rows.push_back(row);
    }
    for (std::uint32_t m = 0; m < p; ++m) {
        if (counts[m] > r.max_roots) r.max_roots = counts[m];
        const std::int64_t lift = m > p / 2 ? static_cast<std::int64_t>(m) - p : m;
        if ((lift < -window || lift > window) && counts[m] != 0) r.support_ok = false;
    }
    const double hp = static_cast<double>(r.max_twelve_h) / 12.0;
    r.ratio = hp > 0 ? static_cast<double>(r.max_roots) / hp : 0.0;
    const double lp = std::log(static_cast<double>(p));
    r.x_p = std::sqrt(static_cast<double>(p)) * lp * std::log(lp) * std::log(lp);
    r.within_bound = 12.0 * r.max_roots <= static_cast<double>(family_bound) * r.max_twelve_h;
    return r;
}

}  // namespace hyproots
