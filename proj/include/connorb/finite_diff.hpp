#pragma once

#include <Eigen/Core>
#include <functional>

namespace connorb {

/// Central-difference Jacobian, entry error O(h^2).  When h <= 0 the step is
/// chosen per component as cbrt(machine eps) * max(1, |x_i|).
Eigen::MatrixXd finite_difference_jacobian(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x,
    double h = 0.0);

Eigen::VectorXd finite_difference_gradient(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x,
    double h = 0.0);

} // namespace connorb
