// Grid evaluation: sample-count arithmetic, thread-count independence,
// capacity guard, and the binary cache.

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>

#include "zetalab/grid.hpp"

using namespace zetalab;

TEST_CASE("sample-count arithmetic", "[grid]") {
    REQUIRE(grid_count(2.0, 2.0 + 10 * 0.02, 0.02) == 11);
    REQUIRE(grid_count(2.0, 10000.0, 0.02) == 499901);
    REQUIRE_THROWS_AS(grid_count(5.0, 2.0, 0.02), std::domain_error);
    REQUIRE_THROWS_AS(grid_count(2.0, 10.0, 0.0), std::domain_error);
}

TEST_CASE("default step resolves the oscillation scale", "[grid]") {
    REQUIRE(default_grid_step(1e4) == 0.02);
    REQUIRE(default_grid_step(2e4) == 0.02);
    // Far beyond desk scale the log factor takes over.
    REQUIRE(default_grid_step(1e12) < 0.02);
    REQUIRE(default_grid_step(1e12) ==
            Catch::Approx(kPi / (8.0 * std::log(1e12))).margin(1e-15));
}

TEST_CASE("grid evaluation is independent of worker count", "[grid]") {
    // Crosses the evaluation-branch boundary at t = 100.
    const ZetaGrid a = eval_grid(2.0, 150.0, 0.01, 0.0, 1);
    const ZetaGrid b = eval_grid(2.0, 150.0, 0.01, 0.0, 4);
    const ZetaGrid c = eval_grid(2.0, 150.0, 0.01, 0.0, 3);
    REQUIRE(a.count == 14801);
    REQUIRE(a.re == b.re);
    REQUIRE(a.im == b.im);
    REQUIRE(a.abs2 == b.abs2);
    REQUIRE(a.re == c.re);
    REQUIRE(a.im == c.im);
    REQUIRE(a.abs2 == c.abs2);
}

TEST_CASE("abs2 is derived from re/im", "[grid]") {
    const ZetaGrid g = eval_grid(90.0, 110.0, 0.5);
    for (u64 i = 0; i < g.count; ++i)
        REQUIRE(g.abs2[i] == g.re[i] * g.re[i] + g.im[i] * g.im[i]);
}

TEST_CASE("oversized grids are refused", "[grid]") {
    REQUIRE_THROWS_AS(eval_grid(2.0, 1e9, 0.002), capacity_error);
}

TEST_CASE("grid cache round-trips bitwise and validates headers", "[grid]") {
    namespace fs = std::filesystem;
    const fs::path dir("grid_cache_test");
    fs::remove_all(dir);
    fs::create_directories(dir);

    const ZetaGrid g = eval_grid(2.0, 120.0, 0.05, 1e-6);
    const std::string path = (dir / "g.bin").string();
    dump_grid(g, path);
    const ZetaGrid r = load_grid(path);
    REQUIRE(r.t0 == g.t0);
    REQUIRE(r.step == g.step);
    REQUIRE(r.count == g.count);
    REQUIRE(r.tol == g.tol);
    REQUIRE(r.re == g.re);
    REQUIRE(r.im == g.im);
    REQUIRE(r.abs2 == g.abs2);

    SECTION("bad magic") {
        const std::string bad = (dir / "bad.bin").string();
        std::FILE* f = std::fopen(bad.c_str(), "wb");
        std::fwrite("NOPE00000000000000000000000000000000", 1, 36, f);
        std::fclose(f);
        REQUIRE_THROWS_AS(load_grid(bad), cache_error);
    }
    SECTION("truncated payload") {
        const std::string cut = (dir / "cut.bin").string();
        fs::copy_file(path, cut);
        fs::resize_file(cut, fs::file_size(cut) - 9);
        REQUIRE_THROWS_AS(load_grid(cut), cache_error);
    }
    SECTION("load_or_eval_grid warm path is bitwise identical to cold") {
        const ZetaGrid cold =
            load_or_eval_grid(2.0, 120.0, 0.05, 1e-6, dir.string(), 2);
        const ZetaGrid warm =
            load_or_eval_grid(2.0, 120.0, 0.05, 1e-6, dir.string(), 1);
        REQUIRE(cold.re == warm.re);
        REQUIRE(cold.im == warm.im);
        REQUIRE(cold.abs2 == warm.abs2);
    }
    SECTION("stale cache parameters are refused") {
        // Same file name, different requested count: poison the file.
        const ZetaGrid small = eval_grid(2.0, 100.0, 0.05);
        char name[96];
        std::snprintf(name, sizeof name, "zgrid_%.6g_%.6g_%.6g.bin", 2.0,
                      120.0, 0.05);
        dump_grid(small, (dir / name).string());
        REQUIRE_THROWS_AS(
            load_or_eval_grid(2.0, 120.0, 0.05, 1e-6, dir.string()),
            cache_error);
    }
    fs::remove_all(dir);
}
