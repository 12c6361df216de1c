#pragma once
// Shared constants, error types and low-level binary I/O helpers.

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <string>

namespace zetalab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Euler-Mascheroni constant, 20 digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr long double kEulerGammaL = 0.57721566490153286061L;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr long double kPiL = 3.14159265358979323846264338L;
inline constexpr double kTwoPi = 2.0 * kPi;

// ---------------------------------------------------------------------------
// Error types.  domain violations use std::domain_error; everything that has
// a dedicated exit code or carries payload gets its own type.
// ---------------------------------------------------------------------------

// A table/grid request exceeds the configured memory budget.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A cache file is missing a valid header, or its header disagrees with the
// requested parameters (stale cache).
struct cache_error : std::runtime_error {
    explicit cache_error(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive refinement hit its depth limit; carries the offending interval and
// the partial estimate so callers can decide what to do with it.
struct depth_error : std::runtime_error {
    double a, b, partial;
    depth_error(double a_, double b_, double partial_, const std::string& what)
        : std::runtime_error(what), a(a_), b(b_), partial(partial_) {}
};

// An exponent fit or plateau estimate was asked for with too few sample
// points to be meaningful.
struct insufficient_range_error : std::runtime_error {
    explicit insufficient_range_error(const std::string& what)
        : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Little-endian binary I/O (explicit byte order so dumps are portable).
// ---------------------------------------------------------------------------
namespace io {

inline void put_u32(std::FILE* f, u32 v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    std::fwrite(b, 1, 4, f);
}

inline void put_u64(std::FILE* f, u64 v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    std::fwrite(b, 1, 8, f);
}

inline void put_f64(std::FILE* f, double v) {
    put_u64(f, std::bit_cast<u64>(v));
}

inline bool get_u32(std::FILE* f, u32& v) {
    unsigned char b[4];
    if (std::fread(b, 1, 4, f) != 4) return false;
    v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return true;
}

inline bool get_u64(std::FILE* f, u64& v) {
    unsigned char b[8];
    if (std::fread(b, 1, 8, f) != 8) return false;
    v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return true;
}

inline bool get_f64(std::FILE* f, double& v) {
    u64 u;
    if (!get_u64(f, u)) return false;
    v = std::bit_cast<double>(u);
    return true;
}

// Deterministic numeric formatting used by every CSV/report writer:
// 12 significant digits, '.' decimal separator, no locale.
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace io
}  // namespace zetalab
