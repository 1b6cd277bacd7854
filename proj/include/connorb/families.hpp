#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>

#include "connorb/errors.hpp"

namespace connorb {

// ---------------------------------------------------------------------------
// Parameter bundles
// ---------------------------------------------------------------------------

/// Parameters of the unscaled n-parameter unfolding
///   y' = (x_2, ..., x_n, mu_1 + sum_{k>=2} mu_k x_k + x_1^2 + h(x, mu)).
struct UnfoldingParams {
    int n = 4;
    Eigen::VectorXd mu;   // (mu_1, ..., mu_n)
    double kappa = 1.0;   // d^2 h / dx_1 dx_2 at the origin

    void validate() const {
        if (n < 3) throw PreconditionError("UnfoldingParams: n must be >= 3");
        if (mu.size() != n) throw PreconditionError("UnfoldingParams: mu must have length n");
    }
};

enum class ParameterChart {
    Spherical,     ///< ||nu||_2 = 1
    Directional,   ///< one nu component pinned to +-1, the rest free
};

/// Parameters after the singular rescaling: nu on the unit sphere (or in a
/// directional chart), the rescaling scale epsilon >= 0 and the quadratic
/// cross coefficient kappa.
struct RescaledParams {
    Eigen::VectorXd nu;
    double epsilon = 0.0;
    double kappa = 1.0;
    ParameterChart chart = ParameterChart::Spherical;
    int pinned_index = -1;  // 0-based, Directional chart only
    /// Optional user-supplied O(eps^2) remainder added to the last component.
    std::function<double(const Eigen::VectorXd&, double)> remainder;

    int n() const { return static_cast<int>(nu.size()); }

    void validate() const {
        if (nu.size() < 3) throw PreconditionError("RescaledParams: need n >= 3");
        if (epsilon < 0.0) throw PreconditionError("RescaledParams: epsilon must be >= 0");
        if (chart == ParameterChart::Spherical) {
            if (std::abs(nu.norm() - 1.0) > 1e-12)
                throw PreconditionError("RescaledParams: spherical chart requires ||nu|| = 1 within 1e-12");
        } else {
            if (pinned_index < 0 || pinned_index >= nu.size())
                throw PreconditionError("RescaledParams: directional chart requires a pinned index");
            if (std::abs(std::abs(nu[pinned_index]) - 1.0) > 1e-12)
                throw PreconditionError("RescaledParams: pinned component must be +-1");
        }
    }
};

/// Michelson-form parameters of the 3D family,
///   x' = (x_2, x_3, c^2 - x_2 + nu3_bar x_3 - x_1^2/2 - 2 eps kappa x_1 x_2).
struct MichelsonParams {
    double c = 0.0;
    double nu3_bar = 0.0;
    double epsilon = 0.0;
    double kappa = 1.0;

    void validate() const {
        if (c < 0.0) throw PreconditionError("MichelsonParams: c must be >= 0");
        if (epsilon < 0.0) throw PreconditionError("MichelsonParams: epsilon must be >= 0");
    }
};

/// Parameters of the translated 4D family around the double-eigenvalue point,
/// lambda = (eta_2, eta_3 - 2, eta_4, eps_bar).
struct FourDParams {
    Eigen::Vector4d lambda = Eigen::Vector4d::Zero();
    double kappa = 1.0;
};

// ---------------------------------------------------------------------------
// Right-hand sides and Jacobians
// ---------------------------------------------------------------------------

/// Limit family (epsilon = 0):  (y_2, ..., y_n, nu_1 + sum_{k>=2} nu_k y_k + y_1^2).
Eigen::VectorXd limit_family_rhs(const Eigen::VectorXd& y, const Eigen::VectorXd& nu);
Eigen::MatrixXd limit_family_jacobian(const Eigen::VectorXd& y, const Eigen::VectorXd& nu);

/// Limit family plus the first-order epsilon term eps*kappa*y_1*y_2 (and the
/// optional remainder hook) in the last component.
Eigen::VectorXd rescaled_family_rhs(const Eigen::VectorXd& y, const RescaledParams& params);

Eigen::Vector3d michelson_rhs(const Eigen::Vector3d& x, const MichelsonParams& params);
Eigen::Matrix3d michelson_jacobian(const Eigen::Vector3d& x, const MichelsonParams& params);

Eigen::Vector4d four_d_translated_rhs(const Eigen::Vector4d& x, const FourDParams& params);
Eigen::Matrix4d four_d_translated_jacobian(const Eigen::Vector4d& x, const FourDParams& params);

/// Unscaled unfolding with pluggable h(x, mu); the default h is kappa*x_1*x_2.
Eigen::VectorXd unscaled_unfolding_rhs(
    const Eigen::VectorXd& x, const UnfoldingParams& params,
    const std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>& h = {});

// ---------------------------------------------------------------------------
// Symmetry structure
// ---------------------------------------------------------------------------

/// Diagonal of the involution R: R_k = (-1)^{n-k+1}, k = 1..n.
Eigen::VectorXd involution_R(int n);
Eigen::VectorXd apply_involution(const Eigen::VectorXd& y);

/// Sign symmetry of the limit family: maps (nu, y) to (nu', y') with
/// nu'_1 = nu_1, nu'_k = (-1)^{n-k+1} nu_k for k >= 2 and y' = R y.
/// The field transforms as f_{nu'}(y') = -R f_{nu}(y).
std::pair<Eigen::VectorXd, Eigen::VectorXd> sign_symmetry(const Eigen::VectorXd& nu,
                                                          const Eigen::VectorXd& y);

/// Membership in the reversibility set T: nu_{n-2i} = 0, i = 0..floor((n-2)/2).
bool in_reversibility_set(const Eigen::VectorXd& nu, double tol = 1e-10);

/// L(y) = y_n - nu_2 y_1 - ... - nu_n y_{n-1} together with its derivative
/// along the limit-family flow, which is nu_1 + y_1^2.
struct MonotoneFunctional {
    double value;
    double flow_derivative;
};
MonotoneFunctional monotone_functional_L(const Eigen::VectorXd& y, const Eigen::VectorXd& nu);

// ---------------------------------------------------------------------------
// Rescaling map between the unscaled unfolding and the rescaled family
// ---------------------------------------------------------------------------

struct RescaledPoint {
    Eigen::VectorXd nu;
    double epsilon;
    Eigen::VectorXd y;
};

/// Forward singular rescaling: given (mu, x) with mu != 0, find the unique
/// epsilon > 0 and nu on the unit sphere with
///   mu_1 = eps^{2n} nu_1,  mu_k = eps^{n-k+1} nu_k (k>=2),  x_k = eps^{n+k-1} y_k.
RescaledPoint rescale(const Eigen::VectorXd& mu, const Eigen::VectorXd& x);

/// Inverse of `rescale`.
std::pair<Eigen::VectorXd, Eigen::VectorXd> unrescale(const Eigen::VectorXd& nu, double epsilon,
                                                      const Eigen::VectorXd& y);

/// Directional 3D chart (nu_2 = -1) to Michelson form:  c^2 = -2*nu1_bar,
/// states x = -2 y.
MichelsonParams michelson_from_directional(double nu1_bar, double nu3_bar, double epsilon,
                                           double kappa);

} // namespace connorb
