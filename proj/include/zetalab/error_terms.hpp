#pragma once
// Aligned error-term series over a zeta grid:
//
//   e[i]       = E(t_i)      = int_0^{t_i} |zeta(1/2+iu)|^2 du
//                              - t_i (log(t_i/2pi) + 2*gamma - 1)
//   dstar[i]   = delta_star(t_i / 2pi)
//   dplain[i]  = delta(t_i)
//   e_star[i]  = e[i] - 2*pi*dstar[i]
//
// The running integral is the cumulative Simpson rule over the grid plus an
// adaptively integrated head piece over [0, t0] (the grid starts at t0 = 2
// to keep the divisor error terms in their domain).

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/divisor_table.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

struct ErrorTermSeries {
    double t0 = 0.0;
    double step = 0.0;
    u64 count = 0;
    double head = 0.0;            // int_0^{t0} |zeta|^2
    std::vector<double> cum_abs2;  // int_0^{t_i} |zeta|^2 (head included)
    std::vector<double> e;         // E(t_i)
    std::vector<double> e_star;    // E*(t_i)
    std::vector<double> dstar;     // delta_star(t_i / 2pi)
    std::vector<double> dplain;    // delta(t_i)

    double t_at(u64 i) const { return t0 + static_cast<double>(i) * step; }
    double t_end() const { return t_at(count ? count - 1 : 0); }

    // E at arbitrary t by linear interpolation between grid nodes.
    double e_at(double t) const {
        if (!(t >= t0) || !(t <= t_end()))
            throw std::domain_error("e_at: t outside the evaluated range");
        const double u = (t - t0) / step;
        u64 i = static_cast<u64>(u);
        if (i >= count - 1) i = count - 2;
        const double frac = u - static_cast<double>(i);
        return e[i] + frac * (e[i + 1] - e[i]);
    }
};

namespace detail {

inline long double zeta_mean_main(double t) {
    const long double tl = t;
    return tl * (std::log(tl / (2.0L * kPiL)) + 2.0L * kEulerGammaL - 1.0L);
}

}  // namespace detail

inline ErrorTermSeries build_error_terms(const ZetaGrid& g,
                                         const DivisorTable& tab,
                                         double head_tol = 1e-10) {
    if (g.count < 3)
        throw std::domain_error("build_error_terms: grid too short");
    if (g.t0 < 2.0)
        throw std::domain_error(
            "build_error_terms: grid must start at t0 >= 2");
    const double x_top = 4.0 * g.t_end() / kTwoPi;
    if (x_top > static_cast<double>(tab.n_max) ||
        g.t_end() > static_cast<double>(tab.n_max))
        throw std::domain_error(
            "build_error_terms: divisor table too small for this grid "
            "(need n_max >= max(t_end, 4*t_end/2pi))");

    ErrorTermSeries s;
    s.t0 = g.t0;
    s.step = g.step;
    s.count = g.count;
    s.head = adaptive_simpson([](double u) { return zeta_abs2(u); }, 0.0, g.t0,
                              {head_tol, 40});
    s.cum_abs2 = cumulative_simpson(g.abs2, g.step);
    s.e.resize(g.count);
    s.e_star.resize(g.count);
    s.dstar.resize(g.count);
    s.dplain.resize(g.count);
    for (u64 i = 0; i < g.count; ++i) {
        const double t = s.t_at(i);
        s.cum_abs2[i] += s.head;
        s.e[i] = static_cast<double>(
            static_cast<long double>(s.cum_abs2[i]) -
            detail::zeta_mean_main(t));
        s.dstar[i] = delta_star(tab, t / kTwoPi);
        s.dplain[i] = delta(tab, t);
        s.e_star[i] = s.e[i] - kTwoPi * s.dstar[i];
    }
    return s;
}

// Dump the aligned series as CSV (12 significant digits, LF line ends).
inline void export_error_terms_csv(const ErrorTermSeries& s,
                                   const ZetaGrid& g, const std::string& path,
                                   u64 stride = 1) {
    if (stride == 0) stride = 1;
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw cache_error("csv export: cannot open " + path);
    std::fputs("t,zeta_abs2,e,e_star,delta_star,delta\n", f);
    for (u64 i = 0; i < s.count; i += stride) {
        std::fprintf(f, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", s.t_at(i),
                     g.abs2[i], s.e[i], s.e_star[i], s.dstar[i], s.dplain[i]);
    }
    if (std::fclose(f) != 0) throw cache_error("csv export: write failed");
}

}  // namespace zetalab
