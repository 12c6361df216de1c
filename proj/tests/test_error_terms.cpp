// Error-term series: the running mean-square integral, E(t), E*(t), and the
// aligned divisor terms, checked against independently computed reference
// values at t = 2 and t = 100.

#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zetalab/error_terms.hpp"
#include "fixtures.hpp"

using namespace zetalab;

TEST_CASE("head integral over [0, 2]", "[error-terms]") {
    const ErrorTermSeries& s = fix::series2k();
    REQUIRE(s.head == Catch::Approx(1.61734100753738032).margin(1e-9));
}

TEST_CASE("E(t) at the left endpoint", "[error-terms]") {
    const ErrorTermSeries& s = fix::series2k();
    REQUIRE(s.t_at(0) == 2.0);
    REQUIRE(s.e[0] == Catch::Approx(3.59793811963004923).margin(1e-8));
}

TEST_CASE("running integral and E at t = 100", "[error-terms]") {
    const ErrorTermSeries& s = fix::series2k();
    const u64 i = 4900;  // (100 - 2) / 0.02
    REQUIRE(s.t_at(i) == Catch::Approx(100.0).margin(1e-9));
    REQUIRE(s.cum_abs2[i] ==
            Catch::Approx(295.63509905471913).margin(5e-7));
    REQUIRE(s.e_at(100.0) ==
            Catch::Approx(3.4626541165379698).margin(5e-7));
}

TEST_CASE("E* is E minus the rescaled alternating divisor term",
          "[error-terms]") {
    const ErrorTermSeries& s = fix::series2k();
    for (u64 i = 0; i < s.count; i += 997)
        REQUIRE(s.e_star[i] == s.e[i] - kTwoPi * s.dstar[i]);
}

TEST_CASE("all series arrays share the grid length", "[error-terms]") {
    const ErrorTermSeries& s = fix::series2k();
    REQUIRE(s.cum_abs2.size() == s.count);
    REQUIRE(s.e.size() == s.count);
    REQUIRE(s.e_star.size() == s.count);
    REQUIRE(s.dstar.size() == s.count);
    REQUIRE(s.dplain.size() == s.count);
}

TEST_CASE("interpolation hits nodes and rejects points outside the range",
          "[error-terms]") {
    const ErrorTermSeries& s = fix::series2k();
    REQUIRE(s.e_at(s.t_at(1234)) == Catch::Approx(s.e[1234]).margin(1e-9));
    REQUIRE(s.e_at(s.t_end()) == Catch::Approx(s.e[s.count - 1]).margin(1e-9));
    REQUIRE_THROWS_AS(s.e_at(1.9), std::domain_error);
    REQUIRE_THROWS_AS(s.e_at(2000.1), std::domain_error);
}

TEST_CASE("construction guards", "[error-terms]") {
    const DivisorTable& tab = fix::tab();
    SECTION("grid must start at t0 >= 2") {
        const ZetaGrid g = eval_grid(1.5, 10.0, 0.5);
        REQUIRE_THROWS_AS(build_error_terms(g, tab), std::domain_error);
    }
    SECTION("grid must have at least three samples") {
        ZetaGrid g = eval_grid(2.0, 4.0, 0.5);
        g.count = 2;
        g.re.resize(2);
        g.im.resize(2);
        g.abs2.resize(2);
        REQUIRE_THROWS_AS(build_error_terms(g, tab), std::domain_error);
    }
    SECTION("divisor table must cover 4 * t_end / 2pi and t_end") {
        const DivisorTable small = sieve_divisors(500);
        const ZetaGrid g = eval_grid(2.0, 2000.0, 1.0);
        REQUIRE_THROWS_AS(build_error_terms(g, small), std::domain_error);
    }
}

TEST_CASE("CSV export layout", "[error-terms]") {
    const DivisorTable& tab = fix::tab();
    const ZetaGrid g = eval_grid(2.0, 20.0, 0.5);
    const ErrorTermSeries s = build_error_terms(g, tab);
    const std::string path = "error_terms_test.csv";
    export_error_terms_csv(s, g, path, 5);

    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    REQUIRE(text.find('\r') == std::string::npos);

    std::vector<std::string> lines;
    std::string line;
    std::stringstream ss(text);
    while (std::getline(ss, line)) lines.push_back(line);
    REQUIRE(lines.size() == 1 + 8);  // header + ceil(37 / 5) rows
    REQUIRE(lines[0] == "t,zeta_abs2,e,e_star,delta_star,delta");
    REQUIRE(lines[1].substr(0, 2) == "2,");
    // Every data row has six comma-separated fields.
    for (size_t r = 1; r < lines.size(); ++r)
        REQUIRE(std::count(lines[r].begin(), lines[r].end(), ',') == 5);
    std::filesystem::remove(path);
}
