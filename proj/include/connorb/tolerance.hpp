#pragma once

#include <limits>

#include "connorb/errors.hpp"

namespace connorb {

/// Shared tolerance bundle for integration, root finding and quadrature checks.
struct ToleranceConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 1.0;
    int max_iters = 50;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(max_step > 0.0))
            throw PreconditionError("ToleranceConfig: tolerances and max_step must be strictly positive");
        if (max_iters < 1)
            throw PreconditionError("ToleranceConfig: max_iters must be >= 1");
    }

    ToleranceConfig with_abs(double a) const { ToleranceConfig t = *this; t.abs_tol = a; return t; }
    ToleranceConfig with_rel(double r) const { ToleranceConfig t = *this; t.rel_tol = r; return t; }
    ToleranceConfig with_max_step(double h) const { ToleranceConfig t = *this; t.max_step = h; return t; }
    ToleranceConfig with_max_iters(int n) const { ToleranceConfig t = *this; t.max_iters = n; return t; }
};

inline ToleranceConfig tight_tolerance(double tol, double max_step = 1.0) {
    ToleranceConfig t;
    t.abs_tol = tol;
    t.rel_tol = tol;
    t.max_step = max_step;
    return t;
}

} // namespace connorb
