#pragma once

#include <Eigen/Core>
#include <complex>
#include <utility>
#include <vector>

#include "connorb/kuramoto.hpp"
#include "connorb/tolerance.hpp"
#include "connorb/trajectory.hpp"

namespace connorb {

/// The reduced adjoint system A(t) v' = B(t) v on the flow-orthogonal slice,
/// with v = (w_3, -w_2).  A is singular exactly where p_2 vanishes; the
/// asymptotic matrix Q = lim A^{-1}B drives the Gronwall tail bounds.
struct DaeSystem {
    KuramotoOrbit orbit;
    double t_hat = 0.0;                 // positive singular time, tanh^2(beta t_hat) = 3/11
    Eigen::Matrix2d Q;                  // [[0, 1], [-30/19, -sqrt(11/19)]]
    Eigen::Matrix2cd P_eig;             // eigenvector matrix of Q
    double a = 0.0;                     // common real part of the eigenvalues of Q
    double norm_P = 0.0;                // ||P||_inf
    double norm_P_inv = 0.0;            // ||P^{-1}||_inf

    Eigen::Matrix2d A(double t) const;
    Eigen::Matrix2d B(double t) const;

    /// R(t) = A(t)^{-1} B(t) - Q.  Only the second row is nonzero; both
    /// entries are evaluated through cancellation-free rational forms in
    /// s = tanh(beta t), so the norm stays monotone down to ~1e-15.
    Eigen::Matrix2d R(double t) const;
    double norm_R(double t) const;      // infinity (max row sum) norm

    std::vector<double> singular_times() const { return {-t_hat, t_hat}; }
};

DaeSystem dae_build();

/// Integrates the reduced system.  Away from the singular times it treats
/// v' = A^{-1}B v as a plain ODE; across each singular time inside the span
/// it lifts to the regular 3-dimensional adjoint equation (w_3 = v_1,
/// w_2 = -v_2, w_1 recovered from the orthogonality constraint) and drops
/// back afterwards, checking the constraint at the handoff.
Trajectory dae_solve_reduced(const DaeSystem& dae, const Eigen::Vector2d& v0,
                             std::pair<double, double> span, const ToleranceConfig& tol);

/// w_1 recovered from the orthogonality constraint <w, f(p(t))> = 0.
double dae_recover_w1(const DaeSystem& dae, double t, const Eigen::Vector2d& v);

} // namespace connorb
