#pragma once
// Divisor-function table: a sieve for d(n) up to a configured bound, prefix
// sums over d, (-1)^n d and d^2, the two divisor error terms built on them,
// and a small binary dump/load format so the sieve can be cached on disk.
//
//   delta(x)      = sum_{n<=x} d(n) - x(log x + 2*gamma - 1)
//   delta_star(x) = (1/2) sum_{n<=4x} (-1)^n d(n) - x(log x + 2*gamma - 1)
//
// delta_star also satisfies -delta(x) + 2*delta(2x) - (1/2)*delta(4x); both
// routes are provided and cross-checked in the tests.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab {

// In-memory cost is ~28 bytes per entry (one u32 plus three i64 prefixes);
// keep tables under ~2 GiB.
inline constexpr u64 kDivisorBudgetBytes = u64(2) << 30;
inline constexpr u64 kDivisorEntryBytes = 4 + 3 * 8;

struct DivisorTable {
    u64 n_max = 0;
    std::vector<u32> d;           // d[n]; d[0] = 0 unused
    std::vector<i64> prefix_d;    // sum_{k<=n} d(k)
    std::vector<i64> prefix_alt;  // sum_{k<=n} (-1)^k d(k)
    std::vector<i64> prefix_d2;   // sum_{k<=n} d(k)^2

    void rebuild_prefixes() {
        prefix_d.assign(n_max + 1, 0);
        prefix_alt.assign(n_max + 1, 0);
        prefix_d2.assign(n_max + 1, 0);
        for (u64 n = 1; n <= n_max; ++n) {
            const i64 dn = d[n];
            prefix_d[n] = prefix_d[n - 1] + dn;
            prefix_alt[n] = prefix_alt[n - 1] + ((n & 1) ? -dn : dn);
            prefix_d2[n] = prefix_d2[n - 1] + dn * dn;
        }
    }
};

inline DivisorTable sieve_divisors(u64 n_max) {
    if (n_max < 1) throw std::domain_error("sieve_divisors: n_max must be >= 1");
    if ((n_max + 1) * kDivisorEntryBytes > kDivisorBudgetBytes)
        throw capacity_error("sieve_divisors: table of " +
                             std::to_string(n_max) +
                             " entries exceeds the 2 GiB budget");
    DivisorTable t;
    t.n_max = n_max;
    t.d.assign(n_max + 1, 0);
    for (u64 i = 1; i <= n_max; ++i)
        for (u64 j = i; j <= n_max; j += i) ++t.d[j];
    t.rebuild_prefixes();
    return t;
}

namespace detail {

// Main term x(log x + 2*gamma - 1), in extended precision so that the exact
// cancellation in identities between error terms is not polluted by the
// (much larger) main terms.
inline long double divisor_main_term(double x) {
    const long double xl = x;
    return xl * (std::log(xl) + 2.0L * kEulerGammaL - 1.0L);
}

// delta for any x > 0 (the empty sum applies below 1); used internally by
// the identity route for delta_star, which needs arguments down to x/4.
inline double delta_any(const DivisorTable& t, double x) {
    if (!(x > 0.0)) throw std::domain_error("delta: x must be positive");
    const u64 ix = static_cast<u64>(x);
    if (ix > t.n_max)
        throw std::domain_error("delta: x exceeds the sieved range");
    const long double sum = (ix >= 1) ? t.prefix_d[ix] : 0;
    return static_cast<double>(sum - divisor_main_term(x));
}

}  // namespace detail

inline double delta(const DivisorTable& t, double x) {
    if (!(x >= 2.0)) throw std::domain_error("delta: x must be >= 2");
    return detail::delta_any(t, x);
}

inline double delta_star(const DivisorTable& t, double x) {
    if (!(x > 0.0)) throw std::domain_error("delta_star: x must be positive");
    const double x4 = 4.0 * x;
    const u64 ix = static_cast<u64>(x4);
    if (ix > t.n_max)
        throw std::domain_error("delta_star: 4x exceeds the sieved range");
    const long double alt = (ix >= 1) ? t.prefix_alt[ix] : 0;
    return static_cast<double>(0.5L * alt - detail::divisor_main_term(x));
}

inline double delta_star_via_delta(const DivisorTable& t, double x) {
    return -detail::delta_any(t, x) + 2.0 * detail::delta_any(t, 2.0 * x) -
           0.5 * detail::delta_any(t, 4.0 * x);
}

// ---------------------------------------------------------------------------
// Binary cache: "DIVT", version, n_max, then d[1..n_max] as little-endian
// u32.  Prefix sums are recomputed on load.
// ---------------------------------------------------------------------------
inline constexpr u32 kDivisorFormatVersion = 1;

inline void dump_divisor_table(const DivisorTable& t, const std::string& path) {
    const std::string tmp = path + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw cache_error("divisor cache: cannot open " + tmp);
    std::fwrite("DIVT", 1, 4, f);
    io::put_u32(f, kDivisorFormatVersion);
    io::put_u64(f, t.n_max);
    for (u64 n = 1; n <= t.n_max; ++n) io::put_u32(f, t.d[n]);
    if (std::fclose(f) != 0) throw cache_error("divisor cache: write failed");
    std::filesystem::rename(tmp, path);
}

inline DivisorTable load_divisor_table(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw cache_error("divisor cache: cannot open " + path);
    char magic[4];
    u32 version = 0;
    u64 n_max = 0;
    if (std::fread(magic, 1, 4, f) != 4 || std::string(magic, 4) != "DIVT" ||
        !io::get_u32(f, version) || version != kDivisorFormatVersion ||
        !io::get_u64(f, n_max)) {
        std::fclose(f);
        throw cache_error("divisor cache: bad header in " + path);
    }
    if ((n_max + 1) * kDivisorEntryBytes > kDivisorBudgetBytes) {
        std::fclose(f);
        throw cache_error("divisor cache: header exceeds the memory budget");
    }
    DivisorTable t;
    t.n_max = n_max;
    t.d.assign(n_max + 1, 0);
    for (u64 n = 1; n <= n_max; ++n) {
        if (!io::get_u32(f, t.d[n])) {
            std::fclose(f);
            throw cache_error("divisor cache: truncated file " + path);
        }
    }
    std::fclose(f);
    t.rebuild_prefixes();
    return t;
}

// Load the cache if present and matching, otherwise sieve and write it.
inline DivisorTable load_or_sieve(u64 n_max, const std::string& cache_dir) {
    if (cache_dir.empty()) return sieve_divisors(n_max);
    std::filesystem::create_directories(cache_dir);
    const std::string path =
        cache_dir + "/divisors_" + std::to_string(n_max) + ".bin";
    if (std::filesystem::exists(path)) {
        DivisorTable t = load_divisor_table(path);
        if (t.n_max == n_max) return t;
        throw cache_error("divisor cache: " + path + " has wrong n_max");
    }
    DivisorTable t = sieve_divisors(n_max);
    dump_divisor_table(t, path);
    return t;
}

}  // namespace zetalab
