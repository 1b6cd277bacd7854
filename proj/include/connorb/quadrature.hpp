#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "connorb/trajectory.hpp"

namespace connorb {

struct QuadratureResult {
    double value = 0.0;
    /// |trapezoid(full grid) - trapezoid(half grid)| / 3, an a-posteriori
    /// estimate of the remaining O(h^2) quadrature error.
    double richardson = 0.0;
};

/// Composite trapezoid over the given node grid (at least 2 nodes, times
/// strictly increasing), with the Richardson half-grid comparison attached.
QuadratureResult quad_nodes(const std::vector<double>& ts, const std::vector<double>& fs);

/// Trapezoid of integrand(t, x(t)) over a trajectory's node grid restricted to
/// [a, b].  Endpoints not on the grid are filled in from the dense output.
QuadratureResult quad_trajectory(const Trajectory& traj,
                                 const std::function<double(double, const Eigen::VectorXd&)>& integrand,
                                 double a, double b);

} // namespace connorb
