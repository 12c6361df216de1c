#pragma once
// Truncated oscillating-series approximations to the divisor error terms:
//
//   delta_star(x) ~ (1/(pi*sqrt(2))) x^{1/4}
//                     sum_{n<=N} (-1)^n d(n) n^{-3/4} cos(4*pi*sqrt(nx) - pi/4)
//
// and the same sum without the (-1)^n twist for delta(x).  Phases are formed
// in extended precision: 4*pi*sqrt(nx) reaches ~1e5 at desk scale and the
// cosine argument must keep absolute accuracy ~1e-12.

#include <cmath>
#include <stdexcept>

#include "zetalab/common.hpp"
#include "zetalab/divisor_table.hpp"

namespace zetalab {

struct VoronoiConfig {
    u64 n_terms = 100;
    bool alternating = true;  // true: delta_star series; false: delta series
};

inline double voronoi_sum(const DivisorTable& tab, double x,
                          const VoronoiConfig& cfg) {
    if (!(x >= 2.0)) throw std::domain_error("voronoi_sum: x must be >= 2");
    if (cfg.n_terms < 1)
        throw std::domain_error("voronoi_sum: need at least one term");
    if (cfg.n_terms > tab.n_max)
        throw std::domain_error(
            "voronoi_sum: more terms than the sieved divisor range");
    const long double xl = x;
    const long double quarter_pi = 0.25L * kPiL;
    long double acc = 0.0L;
    for (u64 n = 1; n <= cfg.n_terms; ++n) {
        const long double phase =
            4.0L * kPiL * sqrtl(static_cast<long double>(n) * xl) - quarter_pi;
        long double term = tab.d[n] * powl(static_cast<long double>(n), -0.75L) *
                           cosl(phase);
        if (cfg.alternating && (n & 1)) term = -term;
        acc += term;
    }
    const long double front = powl(xl, 0.25L) / (kPiL * sqrtl(2.0L));
    return static_cast<double>(front * acc);
}

}  // namespace zetalab
