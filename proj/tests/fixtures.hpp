#pragma once
// Shared, lazily built fixtures for the test suite.  The sieve and the grid
// are the expensive pieces; build each once per test-binary run.

#include "zetalab/divisor_table.hpp"
#include "zetalab/error_terms.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/moments.hpp"

namespace fix {

inline const zetalab::DivisorTable& tab() {
    static const zetalab::DivisorTable t = zetalab::sieve_divisors(1000000);
    return t;
}

// Evaluation grid over [2, 2000] at the production step.
inline const zetalab::ZetaGrid& grid2k() {
    static const zetalab::ZetaGrid g = zetalab::eval_grid(2.0, 2000.0, 0.02);
    return g;
}

inline const zetalab::ErrorTermSeries& series2k() {
    static const zetalab::ErrorTermSeries s =
        zetalab::build_error_terms(grid2k(), tab());
    return s;
}

inline const zetalab::MomentEngine& engine2k() {
    static const zetalab::MomentEngine e(grid2k(), series2k());
    return e;
}

}  // namespace fix
