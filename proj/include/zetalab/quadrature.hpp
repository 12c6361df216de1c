#pragma once
// Simpson-rule quadrature: an adaptive integrator for one-off integrals and a
// cumulative integrator over uniformly sampled data (the workhorse for every
// running integral in the library).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab {

struct QuadratureSpec {
    double tol = 1e-10;   // absolute tolerance on the whole interval
    int max_depth = 40;   // refinement depth before giving up
};

namespace detail {

template <class F>
double adaptive_simpson_rec(F&& f, double a, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth,
                            const QuadratureSpec& spec) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth >= spec.max_depth)
        throw depth_error(a, b, left + right + delta / 15.0,
                          "adaptive Simpson: refinement depth exhausted");
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol,
                                depth + 1, spec) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                                depth + 1, spec);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction.  Throws depth_error if the
// requested tolerance cannot be met within spec.max_depth levels.
template <class F>
double adaptive_simpson(F&& f, double a, double b, QuadratureSpec spec = {}) {
    if (!(spec.tol > 0.0) || spec.max_depth < 1 || spec.max_depth > 60)
        throw std::domain_error(
            "adaptive_simpson: need tol > 0 and 1 <= max_depth <= 60");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, spec.tol,
                                        0, spec);
}

// Composite Simpson over uniformly spaced samples (odd count required).
// Panel sums are accumulated in fixed blocks of 4096 panels and the block
// sums combined in index order, so a thread-parallel evaluation of the
// blocks is bitwise identical to the sequential one.
inline double composite_simpson(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 3 || (n % 2) == 0)
        throw std::domain_error(
            "composite_simpson: need an odd number (>= 3) of samples");
    constexpr std::size_t kBlock = 4096;  // panels per block
    const std::size_t panels = (n - 1) / 2;
    double total = 0.0;
    for (std::size_t b0 = 0; b0 < panels; b0 += kBlock) {
        const std::size_t b1 = std::min(b0 + kBlock, panels);
        double block = 0.0;
        for (std::size_t p = b0; p < b1; ++p) {
            const std::size_t i = 2 * p;
            block += f[i] + 4.0 * f[i + 1] + f[i + 2];
        }
        total += block;
    }
    return h / 3.0 * total;
}

// Cumulative Simpson integral of uniformly spaced samples f[0..n), spacing h.
// Returns cum with cum[i] = integral from node 0 to node i; cum[0] = 0.
// Even nodes use the plain composite rule; odd nodes use the half-panel
// formulas of the quadratic through each node triple, so every node gets an
// O(h^4)-accurate value without re-evaluating the integrand.
inline std::vector<double> cumulative_simpson(const std::vector<double>& f,
                                              double h) {
    const std::size_t n = f.size();
    std::vector<double> cum(n, 0.0);
    if (n < 2) return cum;
    if (n == 2) {  // single interval: trapezoid is all we have
        cum[1] = 0.5 * h * (f[0] + f[1]);
        return cum;
    }
    const double c3 = h / 3.0, c12 = h / 12.0;
    std::size_t k = 0;
    for (; k + 2 < n; k += 2) {
        cum[k + 1] = cum[k] + c12 * (5.0 * f[k] + 8.0 * f[k + 1] - f[k + 2]);
        cum[k + 2] = cum[k] + c3 * (f[k] + 4.0 * f[k + 1] + f[k + 2]);
    }
    if (k + 1 < n)  // even sample count: close the last node from its triple
        cum[n - 1] =
            cum[n - 2] + c12 * (-f[n - 3] + 8.0 * f[n - 2] + 5.0 * f[n - 1]);
    return cum;
}

// Ordinary least squares fit of y against x.  Returns {slope, intercept, r2}.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

inline LineFit fit_line(const std::vector<double>& x,
                        const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n)
        throw insufficient_range_error("fit_line: need at least two points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw insufficient_range_error("fit_line: degenerate abscissae");
    LineFit out;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    out.r2 = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
    return out;
}

}  // namespace zetalab
