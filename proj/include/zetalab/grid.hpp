#pragma once
// Uniform sampling of zeta(1/2 + it) over [t0, t1].  Evaluation is chunked
// and multi-threaded, but each sample is computed independently from its
// index, so results are bitwise identical for any thread count.  Grids can
// be cached on disk ("ZGRD" format) since evaluation dominates the runtime
// of everything downstream.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// ~24 bytes per sample held in memory; cap grids at ~2 GiB.
inline constexpr u64 kGridBudgetBytes = u64(2) << 30;

struct ZetaGrid {
    double t0 = 0.0;
    double step = 0.0;
    double tol = 0.0;  // evaluation tolerance recorded for cache validation
    u64 count = 0;
    std::vector<double> re, im, abs2;

    double t_at(u64 i) const { return t0 + static_cast<double>(i) * step; }
    double t_end() const { return t_at(count ? count - 1 : 0); }
};

// Default sample spacing: fine enough that |zeta|^2 oscillations (local
// wavelength ~ 2*pi / log t) are resolved with many points per period.
inline double default_grid_step(double t1) {
    return std::min(0.02, kPi / (8.0 * std::log(std::max(t1, 16.0))));
}

inline u64 grid_count(double t0, double t1, double step) {
    if (!(t1 > t0) || !(step > 0.0))
        throw std::domain_error("grid: need t1 > t0 and step > 0");
    return static_cast<u64>((t1 - t0) / step + 1e-9) + 1;
}

namespace detail {

inline void run_chunked(u64 count, unsigned threads,
                        const std::function<void(u64, u64)>& body) {
    constexpr u64 kChunk = 4096;
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || count <= kChunk) {
        body(0, count);
        return;
    }
    std::atomic<u64> next{0};
    auto worker = [&] {
        for (;;) {
            const u64 lo = next.fetch_add(kChunk);
            if (lo >= count) return;
            body(lo, std::min(lo + kChunk, count));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace detail

inline ZetaGrid eval_grid(double t0, double t1, double step, double tol = 0.0,
                          unsigned threads = 0) {
    ZetaGrid g;
    g.t0 = t0;
    g.step = step;
    g.tol = tol;
    g.count = grid_count(t0, t1, step);
    if (g.count * 24 > kGridBudgetBytes)
        throw capacity_error("grid: " + std::to_string(g.count) +
                             " samples exceed the 2 GiB budget");
    g.re.resize(g.count);
    g.im.resize(g.count);
    g.abs2.resize(g.count);
    detail::run_chunked(g.count, threads, [&](u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            const ZetaPoint p = zeta_half(g.t_at(i));
            g.re[i] = p.re;
            g.im[i] = p.im;
            g.abs2[i] = p.abs2;
        }
    });
    return g;
}

// ---------------------------------------------------------------------------
// Binary cache: "ZGRD", version, t0, step, count, tol, then count pairs
// (re, im) as little-endian f64.  |zeta|^2 is recomputed on load.
// ---------------------------------------------------------------------------
inline constexpr u32 kGridFormatVersion = 1;

inline void dump_grid(const ZetaGrid& g, const std::string& path) {
    const std::string tmp = path + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw cache_error("grid cache: cannot open " + tmp);
    std::fwrite("ZGRD", 1, 4, f);
    io::put_u32(f, kGridFormatVersion);
    io::put_f64(f, g.t0);
    io::put_f64(f, g.step);
    io::put_u64(f, g.count);
    io::put_f64(f, g.tol);
    for (u64 i = 0; i < g.count; ++i) {
        io::put_f64(f, g.re[i]);
        io::put_f64(f, g.im[i]);
    }
    if (std::fclose(f) != 0) throw cache_error("grid cache: write failed");
    std::filesystem::rename(tmp, path);
}

inline ZetaGrid load_grid(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw cache_error("grid cache: cannot open " + path);
    char magic[4];
    u32 version = 0;
    ZetaGrid g;
    if (std::fread(magic, 1, 4, f) != 4 || std::string(magic, 4) != "ZGRD" ||
        !io::get_u32(f, version) || version != kGridFormatVersion ||
        !io::get_f64(f, g.t0) || !io::get_f64(f, g.step) ||
        !io::get_u64(f, g.count) || !io::get_f64(f, g.tol)) {
        std::fclose(f);
        throw cache_error("grid cache: bad header in " + path);
    }
    if (g.count * 24 > kGridBudgetBytes) {
        std::fclose(f);
        throw cache_error("grid cache: header exceeds the memory budget");
    }
    g.re.resize(g.count);
    g.im.resize(g.count);
    g.abs2.resize(g.count);
    for (u64 i = 0; i < g.count; ++i) {
        if (!io::get_f64(f, g.re[i]) || !io::get_f64(f, g.im[i])) {
            std::fclose(f);
            throw cache_error("grid cache: truncated file " + path);
        }
        g.abs2[i] = g.re[i] * g.re[i] + g.im[i] * g.im[i];
    }
    std::fclose(f);
    return g;
}

inline ZetaGrid load_or_eval_grid(double t0, double t1, double step,
                                  double tol, const std::string& cache_dir,
                                  unsigned threads = 0) {
    if (cache_dir.empty()) return eval_grid(t0, t1, step, tol, threads);
    std::filesystem::create_directories(cache_dir);
    char name[96];
    std::snprintf(name, sizeof name, "zgrid_%.6g_%.6g_%.6g.bin", t0, t1, step);
    const std::string path = cache_dir + "/" + name;
    const u64 want = grid_count(t0, t1, step);
    if (std::filesystem::exists(path)) {
        ZetaGrid g = load_grid(path);
        if (g.t0 != t0 || g.step != step || g.count != want)
            throw cache_error("grid cache: " + path +
                              " disagrees with requested parameters");
        return g;
    }
    ZetaGrid g = eval_grid(t0, t1, step, tol, threads);
    dump_grid(g, path);
    return g;
}

}  // namespace zetalab
