#pragma once

#include <Eigen/Core>

#include "connorb/errors.hpp"

namespace connorb {

/// Canonical structure of the even-dimensional limit family on the
/// reversibility set: the symmetric upper anti-triangular matrix S, its
/// recursion-built inverse, and the coefficient table of the potential V.
struct CanonicalSystem {
    int m = 0;                 // n/2
    Eigen::VectorXd nu;        // full parameter vector (nu_1, ..., nu_n)
    Eigen::MatrixXd S;         // m x m
    Eigen::MatrixXd S_inv;     // lower anti-triangular, built from b
    Eigen::VectorXd b;         // b_1 = 1, then the recursion
    // V(q) = v_cubic q_m^3 + sum_{i<=j} v_quad(i,j) q_i q_j + v_lin . q
    Eigen::MatrixXd v_quad;    // upper-triangular coefficient table
    Eigen::VectorXd v_lin;
    double v_cubic = -1.0 / 3.0;
};

/// Builds the canonical system for even n >= 4 and nu in the reversibility
/// set (checked to 1e-10).  b comes from the recursion, never from a dense
/// inverse; S * S_inv = I is verified to 1e-12.
CanonicalSystem build_canonical(int n, const Eigen::VectorXd& nu);

double potential_V(const Eigen::VectorXd& q, const CanonicalSystem& sys);
Eigen::VectorXd potential_V_gradient(const Eigen::VectorXd& q, const CanonicalSystem& sys);

/// H(q, p) = 1/2 <S p, p> + V(q).
double hamiltonian_H(const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                     const CanonicalSystem& sys);

/// q = S (y_1, y_3, ..., y_{n-1})^t,  p = (y_2, y_4, ..., y_n)^t.
std::pair<Eigen::VectorXd, Eigen::VectorXd> canonical_transform(const Eigen::VectorXd& y,
                                                                const CanonicalSystem& sys);
Eigen::VectorXd inverse_canonical_transform(const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                                            const CanonicalSystem& sys);

/// The transformed vector field (dH/dp, -dH/dq) in canonical coordinates.
std::pair<Eigen::VectorXd, Eigen::VectorXd> canonical_field(const Eigen::VectorXd& q,
                                                            const Eigen::VectorXd& p,
                                                            const CanonicalSystem& sys);

/// H evaluated along a limit-family state y (convenience wrapper).
double hamiltonian_on_state(const Eigen::VectorXd& y, const CanonicalSystem& sys);

/// First integral of the translated 4D field
///   (x_2, x_3, x_4, -x_1 + eta_3 x_3 + x_1^2):
///   H = 1/2 x_1^2 - 1/3 x_1^3 - (eta_3/2) x_2^2 + x_2 x_4 - 1/2 x_3^2.
/// The default eta_3 = 2 is the double-eigenvalue point.
double first_integral_4d(const Eigen::Vector4d& x, double eta3 = 2.0);
Eigen::Vector4d first_integral_4d_gradient(const Eigen::Vector4d& x, double eta3 = 2.0);

} // namespace connorb
