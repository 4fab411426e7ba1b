#include <doctest.h>

#include <sstream>

#include "hyproots/dist.hpp"
#include "hyproots/hyptrunc.hpp"

using namespace hyproots;

TEST_SUITE("dist") {

TEST_CASE("hasse distribution at p=7") {
    PrimeField F(7);
    Poly H = truncate(parse_hyp_spec("2F1(1/2,1/2;1)"), F).poly;
    RootDistribution d = distribution(H, Substitution{}, 1, "2F1(1/2,1/2;1)");
    CHECK(d.counts[0] == 3);
    std::uint64_t total = 0;
    for (auto c : d.counts) total += c;
    CHECK(total == 7);
}

TEST_CASE("constant polynomial lands everything in one class") {
    PrimeField F(11);
    RootDistribution d = distribution(Poly::constant(F, 5), Substitution{}, 1);
    CHECK(d.counts[5] == 11);
    CHECK(summarize(d).max_count == 11);
}

TEST_CASE("thread count does not change the counts") {
    PrimeField F(1009);
    Poly f = truncate(parse_hyp_spec("2F1(1/2,1/2;1)"), F).poly;
    RootDistribution d1 = distribution(f, Substitution{}, 1);
    RootDistribution d2 = distribution(f, Substitution{}, 2);
    RootDistribution d5 = distribution(f, Substitution{}, 5);
    CHECK(d1.counts == d2.counts);
    CHECK(d1.counts == d5.counts);
}

TEST_CASE("substitutions match polynomial composition") {
    PrimeField F(101);
    Poly f = truncate(parse_hyp_spec("2F1(1/4,3/4;1)"), F).poly;
    for (const char* name : {"identity", "4x(1-x)", "1-x^2", "x^3"}) {
        Substitution s = Substitution::parse(name);
        RootDistribution direct = distribution(f, s, 2);
        RootDistribution composed = distribution(f.compose(s.as_poly(F)), Substitution{}, 2);
        INFO("substitution ", name);
        CHECK(direct.counts == composed.counts);
    }
    CHECK_THROWS(Substitution::parse("x^0"));
    CHECK_THROWS(Substitution::parse("cubic"));
}

TEST_CASE("summary window property for the hasse family") {
    for (std::uint32_t p : {7u, 11u, 13u, 101u, 499u}) {
        PrimeField F(p);
        Poly f = truncate(parse_hyp_spec("2F1(1/2,1/2;1)"), F).poly;
        DistSummary s = summarize(distribution(f, Substitution{}, 2));
        INFO("p=", p);
        CHECK(s.within_hasse_window);
        std::uint64_t bins = 0;
        for (auto& [count, n] : s.histogram) bins += n;
        CHECK(bins == p);
    }
}

TEST_CASE("csv export shape and byte stability") {
    PrimeField F(7);
    Poly f = truncate(parse_hyp_spec("2F1(1/2,1/2;1)"), F).poly;
    RootDistribution d = distribution(f, Substitution{}, 1, "2F1(1/2,1/2;1)");
    std::ostringstream a, b;
    write_distribution_csv(d, a);
    write_distribution_csv(d, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 9) == "m,count\r\n");
    // 7 data rows
    std::size_t rows = 0;
    for (char c : a.str())
        if (c == '\n') ++rows;
    CHECK(rows == 8);  // header + 7
    // first data row is m = -3
    CHECK(a.str().find("\r\n-3,") != std::string::npos);
}

TEST_CASE("json sidecar carries provenance") {
    PrimeField F(7);
    Poly f = truncate(parse_hyp_spec("2F1(1/2,1/2;1)"), F).poly;
    RootDistribution d = distribution(f, Substitution{}, 1, "2F1(1/2,1/2;1)");
    std::ostringstream os;
    write_distribution_json(d, os, "test-build");
    const std::string j = os.str();
    CHECK(j.find("\"spec\": \"2F1(1/2,1/2;1)\"") != std::string::npos);
    CHECK(j.find("\"build\": \"test-build\"") != std::string::npos);
    CHECK(j.find("\"p\": 7") != std::string::npos);
}

}  // TEST_SUITE
