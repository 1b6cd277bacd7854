#pragma once

#include <Eigen/Core>
#include <functional>
#include <utility>

#include "connorb/tolerance.hpp"
#include "connorb/trajectory.hpp"

namespace connorb {

using VectorField = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

struct IntegrateOptions {
    /// Applied to the state after every accepted step (e.g. constraint
    /// projection).  The stored node and the dense interpolant both see the
    /// transformed state.
    std::function<void(double, Eigen::VectorXd&)> post_step;
};

/// Adaptive embedded Runge-Kutta 5(4) (Dormand-Prince) with 4th-order dense
/// output.  Local error per step is kept at tol.abs_tol/rel_tol; steps never
/// exceed tol.max_step.  Forward and backward spans are both accepted; the
/// returned trajectory always stores nodes in increasing time.
Trajectory integrate(const VectorField& rhs,
                     const Eigen::VectorXd& x0,
                     std::pair<double, double> t_span,
                     const ToleranceConfig& tol,
                     const IntegrateOptions& opts = {});

} // namespace connorb
