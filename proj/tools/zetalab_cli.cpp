// zetalab command-line harness.
//
// Subcommands:
//   verify   full verification run: builds/loads caches, computes all moment
//            targets at decade-spaced heights, writes report.csv/summary.txt
//   table    divisor-table point query (d(n) and its prefix sums)
//   delta    divisor error terms at one x
//   zeta     zeta(1/2 + it) at one t
//   voronoi  truncated-series approximation vs exact error term at one x
//   moments  moment rows for selected targets, CSV to stdout or --out
//
// Exit codes: 0 success / all enabled checks pass; 1 check or tolerance
// failure; 2 usage or domain error; 3 cache error.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetalab/common.hpp"
#include "zetalab/divisor_table.hpp"
#include "zetalab/error_terms.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/voronoi.hpp"
#include "zetalab/zeta.hpp"

namespace {

using namespace zetalab;

std::vector<Target> parse_targets_or_throw(const std::string& spec) {
    std::vector<Target> out;
    if (spec.empty() || spec == "all") return out;  // empty = all
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        const std::string tok =
            spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        if (!tok.empty()) {
            const auto t = parse_target(tok);
            if (!t)
                throw std::domain_error("unknown target id: " + tok);
            out.push_back(*t);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::domain_error("no targets given");
    return out;
}

// Divisor table sized for every query the subcommands make.
DivisorTable table_for(double x_need, u64 n_need, const std::string& cache_dir) {
    u64 n = 1000000;
    if (x_need > 0.0)
        n = std::max(n, static_cast<u64>(std::ceil(x_need)) + 1);
    n = std::max(n, n_need);
    return load_or_sieve(n, cache_dir);
}

int cmd_verify(const RunConfig& cfg) {
    Report rep = run_verification(cfg);
    write_reports(rep);
    for (const auto& c : rep.checks) {
        const char* status = !c.enabled ? "SKIP" : (c.pass ? "PASS" : "FAIL");
        std::printf("criterion %2d [%s] %s: %s\n", c.id, status,
                    c.name.c_str(), c.detail.c_str());
    }
    std::printf("report: %s/report.csv\nsummary: %s/summary.txt\n",
                cfg.out_dir.c_str(), cfg.out_dir.c_str());
    return rep.all_enabled_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for divisor error terms and zeta "
                 "mean-value integrals"};
    app.set_config("--config", "", "plain key=value config file, overridden "
                                   "by command-line flags");

    RunConfig cfg;
    std::string targets_spec = "all";
    app.add_option("--t-max", cfg.t_max, "upper verification height (>= 100)")
        ->capture_default_str();
    app.add_option("--step", cfg.step, "grid step (<= 0 selects auto)")
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "declared quadrature tolerance")
        ->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir,
                   "directory for divisor/grid caches (empty: no caching)");
    app.add_option("--threads", cfg.threads,
                   "worker threads (0: hardware concurrency)")
        ->capture_default_str();
    app.add_option("--out", cfg.out_dir, "output directory for report files")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "full verification run");
    verify->fallthrough();
    verify->add_option("--targets", targets_spec,
                       "comma-separated target ids or 'all'")
        ->capture_default_str();

    auto* table = app.add_subcommand("table", "divisor table point query");
    table->fallthrough();
    u64 query_n = 12, table_n_max = 0;
    table->add_option("--n", query_n, "query point")->capture_default_str();
    table->add_option("--n-max", table_n_max,
                      "table size (0: max(1e6, n))");

    auto* delta_cmd = app.add_subcommand("delta", "divisor error terms at x");
    delta_cmd->fallthrough();
    double qx = 0.0;
    delta_cmd->add_option("--x", qx, "argument x (>= 2)")->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "zeta(1/2+it) at one t");
    zeta_cmd->fallthrough();
    double qt = 0.0;
    zeta_cmd->add_option("--t", qt, "height t")->required();

    auto* voronoi_cmd =
        app.add_subcommand("voronoi", "truncated series vs exact error term");
    voronoi_cmd->fallthrough();
    double vx = 0.0;
    VoronoiConfig vcfg;
    voronoi_cmd->add_option("--x", vx, "argument x (>= 2)")->required();
    voronoi_cmd->add_option("--n", vcfg.n_terms, "number of series terms")
        ->capture_default_str();
    voronoi_cmd->add_flag("--alternating,!--no-alternating", vcfg.alternating,
                          "alternating series (delta_star) vs plain (delta)");

    auto* moments_cmd =
        app.add_subcommand("moments", "moment rows for selected targets");
    moments_cmd->fallthrough();
    moments_cmd->add_option("--targets", targets_spec,
                            "comma-separated target ids or 'all'")
        ->capture_default_str();

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0; any parse error is 2
    }

    try {
        if (*verify) {
            cfg.targets = parse_targets_or_throw(targets_spec);
            return cmd_verify(cfg);
        }
        if (*table) {
            const u64 n_max =
                table_n_max ? table_n_max : std::max<u64>(1000000, query_n);
            if (query_n < 1 || query_n > n_max)
                throw std::domain_error("table: need 1 <= n <= n_max");
            const DivisorTable t = load_or_sieve(n_max, cfg.cache_dir);
            std::printf("n,d,prefix_d,prefix_alt,prefix_d2\n");
            std::printf("%llu,%u,%lld,%lld,%lld\n",
                        static_cast<unsigned long long>(query_n),
                        t.d[query_n],
                        static_cast<long long>(t.prefix_d[query_n]),
                        static_cast<long long>(t.prefix_alt[query_n]),
                        static_cast<long long>(t.prefix_d2[query_n]));
            return 0;
        }
        if (*delta_cmd) {
            const DivisorTable t = table_for(4.0 * qx, 0, cfg.cache_dir);
            const double d = delta(t, qx);
            const double ds = delta_star(t, qx);
            const double di = delta_star_via_delta(t, qx);
            std::printf("x,delta,delta_star,delta_star_identity\n");
            std::printf("%s,%s,%s,%s\n", io::fmt(qx).c_str(),
                        io::fmt(d).c_str(), io::fmt(ds).c_str(),
                        io::fmt(di).c_str());
            return 0;
        }
        if (*zeta_cmd) {
            const ZetaPoint p = zeta_half(qt);
            std::printf("t,re,im,abs2\n");
            std::printf("%s,%s,%s,%s\n", io::fmt(p.t).c_str(),
                        io::fmt(p.re).c_str(), io::fmt(p.im).c_str(),
                        io::fmt(p.abs2).c_str());
            return 0;
        }
        if (*voronoi_cmd) {
            const DivisorTable t = table_for(
                vcfg.alternating ? 4.0 * vx : vx, vcfg.n_terms, cfg.cache_dir);
            const double series = voronoi_sum(t, vx, vcfg);
            const double exact =
                vcfg.alternating ? delta_star(t, vx) : delta(t, vx);
            std::printf("x,n_terms,alternating,series,exact,abs_error\n");
            std::printf("%s,%llu,%d,%s,%s,%s\n", io::fmt(vx).c_str(),
                        static_cast<unsigned long long>(vcfg.n_terms),
                        vcfg.alternating ? 1 : 0, io::fmt(series).c_str(),
                        io::fmt(exact).c_str(),
                        io::fmt(std::abs(series - exact)).c_str());
            return 0;
        }
        if (*moments_cmd) {
            cfg.targets = parse_targets_or_throw(targets_spec);
            Report rep = run_verification(cfg);
            const bool to_file = app.count("--out") > 0;
            if (to_file) {
                std::filesystem::create_directories(cfg.out_dir);
                write_report_csv(rep, cfg.out_dir + "/moments.csv");
                std::printf("wrote %s/moments.csv\n", cfg.out_dir.c_str());
            } else {
                std::printf("target_id,T,value,main_term,ratio,bound_value,"
                            "slope,r2\n");
                for (const auto& row : rep.rows) {
                    const MomentResult& m = row.res;
                    std::printf("%s,%s,%s,", to_string(m.id),
                                io::fmt(m.t1).c_str(),
                                io::fmt(m.value).c_str());
                    if (m.has_main)
                        std::printf("%s,%s,", io::fmt(m.main_term).c_str(),
                                    io::fmt(m.ratio).c_str());
                    else
                        std::printf(",,");
                    if (m.has_bound)
                        std::printf("%s,", io::fmt(m.bound_value).c_str());
                    else
                        std::printf(",");
                    if (row.has_fit)
                        std::printf("%s,%s\n", io::fmt(row.fit.slope).c_str(),
                                    io::fmt(row.fit.r2).c_str());
                    else
                        std::printf(",\n");
                }
            }
            return 0;
        }
        std::fprintf(stderr, "no subcommand selected\n");
        return 2;
    } catch (const cache_error& e) {
        std::fprintf(stderr, "cache error: %s\n", e.what());
        return 3;
    } catch (const depth_error& e) {
        std::fprintf(stderr, "quadrature failure: %s\n", e.what());
        return 1;
    } catch (const capacity_error& e) {
        std::fprintf(stderr, "capacity error: %s\n", e.what());
        return 2;
    } catch (const insufficient_range_error& e) {
        std::fprintf(stderr, "insufficient range: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
