// Truncated oscillating-series approximation to the divisor error terms.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "zetalab/voronoi.hpp"
#include "fixtures.hpp"

using namespace zetalab;

TEST_CASE("single-term value at x = 4", "[voronoi]") {
    // One term: x^{1/4}/(pi*sqrt(2)) * d(1) * cos(8*pi - pi/4), negated by
    // the alternating sign at n = 1.
    const DivisorTable& tab = fix::tab();
    const double v = voronoi_sum(tab, 4.0, {1, true});
    REQUIRE(v == Catch::Approx(-0.2250790790392765173887998).margin(1e-14));
    const double w = voronoi_sum(tab, 4.0, {1, false});
    REQUIRE(w == Catch::Approx(+0.2250790790392765173887998).margin(1e-14));
}

TEST_CASE("domain guards", "[voronoi]") {
    const DivisorTable& tab = fix::tab();
    REQUIRE_THROWS_AS(voronoi_sum(tab, 0.0, {10, true}), std::domain_error);
    REQUIRE_THROWS_AS(voronoi_sum(tab, -3.0, {10, true}), std::domain_error);
    REQUIRE_THROWS_AS(voronoi_sum(tab, 1.9, {10, true}), std::domain_error);
    REQUIRE_THROWS_AS(voronoi_sum(tab, 100.0, {0, true}), std::domain_error);
    REQUIRE_THROWS_AS(voronoi_sum(tab, 100.0, {tab.n_max + 1, true}),
                      std::domain_error);
}

TEST_CASE("series tracks the exact alternating error term", "[voronoi]") {
    const DivisorTable& tab = fix::tab();
    const double x = 1e4;
    const double exact = delta_star(tab, x);
    const double approx = voronoi_sum(tab, x, {10000, true});
    // The truncation error is of the same order as the term size scale
    // x^{1/4}; at N = 10^4 it is empirically a fraction of that.
    REQUIRE(std::abs(approx - exact) < 2.0 * std::pow(x, 0.25));
    // And the crude single-term approximation should be worse on average;
    // just check the long sum lands in a plausible window.
    REQUIRE(std::abs(approx) < 40.0);
}
