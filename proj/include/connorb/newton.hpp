#pragma once

#include <Eigen/Core>
#include <functional>

#include "connorb/tolerance.hpp"

namespace connorb {

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using JacobianFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

struct NewtonOptions {
    /// Analytic Jacobian; central finite differences are used when absent.
    JacobianFn jacobian;
    /// Cap on the step length in the infinity norm (0 = no cap).
    double max_step_norm = 0.0;
};

/// Damped Newton iteration for square systems.  Converges when
/// ||residual||_inf <= tol.abs_tol; iterates that fail to reduce the residual
/// after repeated damping are rejected as divergence.
Eigen::VectorXd newton_solve(const ResidualFn& residual,
                             Eigen::VectorXd x0,
                             const ToleranceConfig& tol,
                             const NewtonOptions& opts = {});

} // namespace connorb
