// Command-line front end. Subcommands mirror the library modules; data files
// are CSV (RFC 4180) with JSON sidecars carrying provenance so figure data
// can be regenerated bit-for-bit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyproots/classnum.hpp"
#include "hyproots/curves.hpp"
#include "hyproots/dist.hpp"
#include "hyproots/identities.hpp"
#include "hyproots/kummer.hpp"
#include "hyproots/ratfun.hpp"

#ifndef HYPROOTS_BUILD_VERSION
#define HYPROOTS_BUILD_VERSION "dev"
#endif

using namespace hyproots;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

PrimeField checked_field(std::uint64_t p) {
    if (p < 3 || p >= (1ull << 31) || !is_prime(p))
        throw CLI::ValidationError("p", std::to_string(p) +
                                            " is not prime (need an odd prime below 2^31)");
    return PrimeField(static_cast<std::uint32_t>(p));
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("primes", "expected LO..HI, got \"" + s + "\"");
    return {static_cast<std::uint32_t>(std::stoul(s.substr(0, dots))),
            static_cast<std::uint32_t>(std::stoul(s.substr(dots + 2)))};
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << body;
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string sidecar_path(const std::string& out) {
    const auto dot = out.rfind('.');
    return (dot == std::string::npos ? out : out.substr(0, dot)) + ".json";
}

Rational parse_rational_arg(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(static_cast<std::uint32_t>(std::stoul(s)), 1);
    return Rational(static_cast<std::uint32_t>(std::stoul(s.substr(0, slash))),
                    static_cast<std::uint32_t>(std::stoul(s.substr(slash + 1))));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated hypergeometric polynomials over prime fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    app.set_version_flag("--version", HYPROOTS_BUILD_VERSION);

    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();

    // ---- truncate ----
    auto* cmd_trunc = app.add_subcommand("truncate", "print a natural truncation");
    std::string t_spec = "2F1(1/2,1/2;1)";
    std::uint64_t t_p = 7;
    cmd_trunc->add_option("--spec", t_spec, "hypergeometric spec, e.g. 2F1(1/2,1/2;1)")->required();
    cmd_trunc->add_option("--p", t_p, "odd prime")->required();

    // ---- dist ----
    auto* cmd_dist = app.add_subcommand("dist", "root-count distribution N_p(m)");
    std::string d_spec, d_subst = "identity", d_out = "dist.csv";
    std::uint64_t d_p = 0;
    cmd_dist->add_option("--spec", d_spec)->required();
    cmd_dist->add_option("--p", d_p)->required();
    cmd_dist->add_option("--subst", d_subst, "identity | 4x(1-x) | 1-x^2 | x^k");
    cmd_dist->add_option("--out", d_out, "CSV output path");

    // ---- identities ----
    auto* cmd_id = app.add_subcommand("identities", "verify the transformation identities");
    std::string i_primes = "5..199", i_bs = "3,4,6", i_report;
    cmd_id->add_option("--primes", i_primes, "prime range LO..HI");
    cmd_id->add_option("--b", i_bs, "comma-separated denominators");
    cmd_id->add_option("--report", i_report, "JSON report path");

    // ---- curve-count ----
    auto* cmd_cc = app.add_subcommand("curve-count", "traces across an elliptic family");
    std::string c_family = "legendre";
    std::uint64_t c_p = 0;
    std::string c_out;
    cmd_cc->add_option("--family", c_family, "legendre | b3 | b4 | b6 | elambda");
    cmd_cc->add_option("--p", c_p)->required();
    cmd_cc->add_option("--out", c_out, "JSON output path");

    // ---- k3-count ----
    auto* cmd_k3c = app.add_subcommand("k3-count", "K3 counting function J_{lambda,b}");
    std::uint64_t k_p = 0, k_lambda = 1;
    int k_b = 2;
    std::string k_mode = "coeff_poly";
    cmd_k3c->add_option("--b", k_b, "2 | 3 | 4 | 6");
    cmd_k3c->add_option("--p", k_p)->required();
    cmd_k3c->add_option("--lambda", k_lambda)->required();
    cmd_k3c->add_option("--mode", k_mode, "double_sum | coeff_poly | both");

    // ---- k3-check ----
    auto* cmd_k3 = app.add_subcommand("k3-check", "K3 criterion for the surface families");
    std::uint64_t q_p = 0, q_lambda = 1;
    int q_b = 3;
    cmd_k3->add_option("--b", q_b, "3 | 4 | 6");
    cmd_k3->add_option("--p", q_p)->required();
    cmd_k3->add_option("--lambda", q_lambda)->required();

    // ---- iso-classes ----
    auto* cmd_iso = app.add_subcommand("iso-classes", "isomorphism-class multiplicities");
    std::string s_family = "legendre";
    std::uint64_t s_p = 0;
    cmd_iso->add_option("--family", s_family);
    cmd_iso->add_option("--p", s_p)->required();

    // ---- classnum ----
    auto* cmd_cn = app.add_subcommand("classnum", "Hurwitz class numbers");
    std::vector<std::uint64_t> n_values;
    cmd_cn->add_option("--N", n_values, "discriminant values (positive)")->required();

    // ---- deuring ----
    auto* cmd_de = app.add_subcommand("deuring", "root counts vs class numbers");
    std::uint64_t e_p = 0;
    std::string e_family = "legendre", e_out;
    cmd_de->add_option("--p", e_p)->required();
    cmd_de->add_option("--family", e_family);
    cmd_de->add_option("--out", e_out, "CSV output: m, N_p(m), 12H(4p-m^2)");

    // ---- ratfun ----
    auto* cmd_rf = app.add_subcommand("ratfun", "rational-function truncation classes");
    std::string r_num = "1", r_den = "1-x";
    std::uint64_t r_p = 7;
    std::uint32_t r_k = 1;
    bool r_auto_k = false;
    cmd_rf->add_option("--num", r_num, "numerator, e.g. \"1\" or \"1+2x\"");
    cmd_rf->add_option("--den", r_den, "denominator, e.g. \"1-x\"");
    cmd_rf->add_option("--p", r_p)->required();
    cmd_rf->add_option("--k", r_k, "truncate at p-k");
    cmd_rf->add_flag("--auto-k", r_auto_k, "scan k upward when f_{p-k} vanishes");

    // ---- kummer ----
    auto* cmd_ku = app.add_subcommand("kummer", "Kummer truncations over F_q");
    std::uint64_t u_p = 7;
    std::uint32_t u_m = 2;
    std::string u_alpha = "gen", u_beta = "1/3";
    bool u_sweep = false;
    cmd_ku->add_option("--p", u_p)->required();
    cmd_ku->add_option("--m", u_m, "extension degree");
    cmd_ku->add_option("--alpha", u_alpha, "gen | t | t+<c>");
    cmd_ku->add_option("--beta", u_beta, "rational a/b");
    cmd_ku->add_flag("--sweep", u_sweep, "also count roots");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_trunc) {
            PrimeField F = checked_field(t_p);
            TruncatedPoly t = truncate(parse_hyp_spec(t_spec), F);
            json j;
            j["spec"] = t.spec.str();
            j["p"] = F.p();
            j["degree"] = t.report.N;
            j["factorial_bound"] = t.report.factorial_bound;
            if (!t.report.factorial_bound) {
                const auto& mb = t.report.bounds[t.report.min_index];
                j["minimizer"] = mb.param.str();
                j["omega"] = mb.omega;
            }
            j["coefficients"] = t.poly.coeffs();
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*cmd_dist) {
            PrimeField F = checked_field(d_p);
            const auto spec = parse_hyp_spec(d_spec);
            const Substitution subst = Substitution::parse(d_subst);
            TruncatedPoly t = truncate(spec, F);
            RootDistribution dist = distribution(t.poly, subst, threads, spec.str());
            std::ostringstream csv;
            write_distribution_csv(dist, csv);
            write_file(d_out, csv.str());
            std::ostringstream meta;
            write_distribution_json(dist, meta, HYPROOTS_BUILD_VERSION);
            write_file(sidecar_path(d_out), meta.str());
            DistSummary s = summarize(dist);
            std::cout << "p=" << F.p() << " deg=" << dist.degree << " M_p=" << s.max_count
                      << " wall=" << dist.seconds << "s -> " << d_out << "\n";
            return kExitOk;
        }

        if (*cmd_id) {
            auto [lo, hi] = parse_range(i_primes);
            std::set<int> bs;
            std::stringstream ss(i_bs);
            for (std::string tok; std::getline(ss, tok, ',');) bs.insert(std::stoi(tok));
            SuiteResult res = run_identity_suite(lo, hi, bs, threads);
            if (!i_report.empty()) {
                json j;
                j["build"] = HYPROOTS_BUILD_VERSION;
                j["primes"] = i_primes;
                j["failures"] = res.failures;
                j["checked"] = res.verdicts.size();
                j["notes"] = res.notes;
                json bad = json::array();
                for (const auto& v : res.verdicts)
                    if (!v.holds || !v.degrees_expected)
                        bad.push_back({{"id", v.id},
                                       {"p", v.p},
                                       {"a", v.a.str()},
                                       {"class", v.cls},
                                       {"first_mismatch",
                                        v.first_mismatch ? json(*v.first_mismatch) : json()}});
                j["failing_cases"] = bad;
                write_file(i_report, j.dump(2) + "\n");
            }
            std::cout << "identities: " << res.verdicts.size() << " cases, " << res.failures
                      << " failures\n";
            return res.failures == 0 ? kExitOk : kExitVerifyFail;
        }

        if (*cmd_cc) {
            PrimeField F = checked_field(c_p);
            const Family fam = family_from_name(c_family);
            QuadCharTable chi(F);
            json rows = json::array();
            for (std::uint32_t lam = 0; lam < F.p(); ++lam) {
                CurveCount cc = count_curve(fam, lam, chi);
                if (cc.singular)
                    rows.push_back({{"lambda", lam}, {"singular", true}});
                else
                    rows.push_back({{"lambda", lam}, {"trace", cc.trace}});
            }
            CorrespondenceReport rep = hyp_curve_correspondence(fam, F);
            json j;
            j["family"] = family_name(fam);
            j["p"] = F.p();
            j["correspondence_ok"] = rep.ok();
            j["checked"] = rep.checked;
            j["curves"] = rows;
            if (!c_out.empty())
                write_file(c_out, j.dump(2) + "\n");
            else
                std::cout << j.dump(2) << "\n";
            return rep.ok() ? kExitOk : kExitVerifyFail;
        }

        if (*cmd_k3c) {
            PrimeField F = checked_field(k_p);
            QuadCharTable chi(F);
            json j;
            j["b"] = k_b;
            j["p"] = F.p();
            j["lambda"] = k_lambda;
            const auto lam = static_cast<std::uint32_t>(k_lambda % F.p());
            bool ok = true;
            if (k_mode == "double_sum" || k_mode == "both")
                j["double_sum"] = count_k3(k_b, lam, chi, K3Mode::double_sum);
            if (k_mode == "coeff_poly" || k_mode == "both")
                j["coeff_poly"] = count_k3(k_b, lam, chi, K3Mode::coeff_poly);
            if (k_mode == "both") ok = j["double_sum"] == j["coeff_poly"];
            std::cout << j.dump(2) << "\n";
            return ok ? kExitOk : kExitVerifyFail;
        }

        if (*cmd_k3) {
            PrimeField F = checked_field(q_p);
            K3Verdict v = k3_criterion(q_b, static_cast<std::uint32_t>(q_lambda % F.p()), F);
            json j;
            j["b"] = q_b;
            j["p"] = F.p();
            j["lambda"] = q_lambda;
            j["nonconstant_delta"] = v.nonconstant_delta;
            j["degree_bound"] = v.degree_bound;
            j["no_twelfth_power"] = v.no_twelfth_power;
            j["delta_matches_expected"] = v.delta_matches_expected;
            j["is_k3"] = v.all();
            std::cout << j.dump(2) << "\n";
            return v.all() && v.delta_matches_expected ? kExitOk : kExitVerifyFail;
        }

        if (*cmd_iso) {
            if (s_p > 100000) throw CLI::ValidationError("p", "exhaustive sweep guard: p <= 1e5");
            PrimeField F = checked_field(s_p);
            IsoClassReport rep = iso_class_multiplicity(family_from_name(s_family), F);
            json j;
            j["family"] = family_name(rep.family);
            j["p"] = rep.p;
            j["admissible_lambdas"] = rep.admissible;
            j["max_multiplicity"] = rep.max_multiplicity;
            j["bound"] = family_class_bound(rep.family);
            j["witness_groups"] = rep.witness_groups;
            std::cout << j.dump(2) << "\n";
            return rep.max_multiplicity <= family_class_bound(rep.family) ? kExitOk
                                                                          : kExitVerifyFail;
        }

        if (*cmd_cn) {
            json j = json::array();
            for (std::uint64_t N : n_values) {
                HurwitzValue v = hurwitz(N);
                j.push_back({{"N", N},
                             {"twelve_h", v.twelve_h},
                             {"H", static_cast<double>(v.twelve_h) / 12.0}});
            }
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*cmd_de) {
            if (e_p > 100000) throw CLI::ValidationError("p", "exhaustive sweep guard: p <= 1e5");
            PrimeField F = checked_field(e_p);
            const Family fam = family_from_name(e_family);
            const FamilyHyp fh = family_hyp(fam);
            TruncatedPoly t = truncate(fh.spec, F);
            RootDistribution dist = distribution(t.poly, Substitution{}, threads, fh.spec.str());
            DeuringReport rep = deuring_report(F.p(), dist.counts, family_class_bound(fam));
            std::ostringstream csv;
            csv << "m,roots,twelve_h\r\n";
            for (const auto& row : rep.rows)
                csv << row.m << "," << row.roots << "," << row.twelve_h << "\r\n";
            if (!e_out.empty()) {
                write_file(e_out, csv.str());
                json meta;
                meta["p"] = rep.p;
                meta["family"] = family_name(fam);
                meta["spec"] = fh.spec.str();
                meta["M_p"] = rep.max_roots;
                meta["twelve_H_p"] = rep.max_twelve_h;
                meta["ratio"] = rep.ratio;
                meta["X_p"] = rep.x_p;
                meta["bound_factor"] = rep.bound_factor;
                meta["within_bound"] = rep.within_bound;
                meta["support_ok"] = rep.support_ok;
                meta["build"] = HYPROOTS_BUILD_VERSION;
                write_file(sidecar_path(e_out), meta.dump(2) + "\n");
            } else {
                std::cout << csv.str();
            }
            std::cout << "p=" << rep.p << " M_p=" << rep.max_roots
                      << " 12H_p=" << rep.max_twelve_h << " ratio=" << rep.ratio
                      << " within_bound=" << (rep.within_bound ? "yes" : "no") << "\n";
            return rep.within_bound && rep.support_ok ? kExitOk : kExitVerifyFail;
        }

        if (*cmd_rf) {
            PrimeField F = checked_field(r_p);
            auto parse_int_poly = [](const std::string& s) {
                // tiny parser for c0 + c1 x + c2 x^2 ... with +/- separators
                std::vector<std::int64_t> out;
                std::size_t i = 0;
                while (i < s.size()) {
                    std::int64_t sign = 1;
                    while (i < s.size() && (s[i] == '+' || s[i] == '-' || s[i] == ' ')) {
                        if (s[i] == '-') sign = -sign;
                        ++i;
                    }
                    if (i >= s.size()) break;
                    std::int64_t coef = 1;
                    bool have_digits = false;
                    std::int64_t v = 0;
                    while (i < s.size() && isdigit(s[i])) {
                        v = v * 10 + (s[i] - '0');
                        have_digits = true;
                        ++i;
                    }
                    if (have_digits) coef = v;
                    std::size_t expo = 0;
                    if (i < s.size() && s[i] == 'x') {
                        expo = 1;
                        ++i;
                        if (i < s.size() && s[i] == '^') {
                            ++i;
                            std::size_t e = 0;
                            while (i < s.size() && isdigit(s[i])) e = e * 10 + (s[i] - '0'), ++i;
                            expo = e;
                        }
                    }
                    if (out.size() <= expo) out.resize(expo + 1, 0);
                    out[expo] += sign * coef;
                }
                return out;
            };
            RationalFun fn(parse_int_poly(r_num), parse_int_poly(r_den));
            ValueClassification c = [&] {
                if (!r_auto_k) return classify_values(fn, F, r_k);
                for (std::uint32_t k = r_k; k <= r_k + 8; ++k) {
                    try {
                        return classify_values(fn, F, k);
                    } catch (const std::invalid_argument& e) {
                        if (std::string(e.what()).rfind("BadK", 0) != 0) throw;
                    }
                }
                throw std::invalid_argument("BadK: no admissible k found");
            }();
            json j;
            j["fn"] = fn.str();
            j["p"] = F.p();
            j["exceptional_m0"] = c.exceptional_m0 ? json(*c.exceptional_m0) : json();
            j["bounded_bound"] = c.bounded_bound;
            j["counts_within_bound"] = c.counts_within_bound;
            std::cout << j.dump(2) << "\n";
            return c.counts_within_bound ? kExitOk : kExitVerifyFail;
        }

        if (*cmd_ku) {
            (void)checked_field(u_p);  // validates the prime before the field search
            ExtField K(static_cast<std::uint32_t>(u_p), u_m);
            FqElem alpha;
            if (u_alpha == "gen") alpha = K.primitive_element();
            else if (u_alpha == "t") alpha = K.gen();
            else if (u_alpha.rfind("t+", 0) == 0)
                alpha = K.add(K.gen(), K.from_base(static_cast<std::uint32_t>(
                                          std::stoul(u_alpha.substr(2)))));
            else throw CLI::ValidationError("alpha", "expected gen, t or t+<c>");
            KummerSpec spec(K, alpha, parse_rational_arg(u_beta));
            KummerTruncation t = kummer_truncate(spec);
            const bool residual_zero = de_residual(spec, t).is_zero();
            json j;
            j["p"] = u_p;
            j["m"] = u_m;
            j["q"] = K.q();
            j["beta"] = u_beta;
            j["n_star"] = t.n_star;
            j["k"] = t.k;
            j["degree"] = t.eta.degree();
            j["de_residual_zero"] = residual_zero;
            if (u_sweep) {
                RootCountReport rc = kummer_root_count(spec, t, threads);
                j["roots"] = rc.count;
                j["p_to_6_7"] = rc.p_to_6_7;
                j["ratio"] = rc.ratio;
            }
            std::cout << j.dump(2) << "\n";
            return residual_zero ? kExitOk : kExitVerifyFail;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
