#pragma once

#include <Eigen/Core>
#include <array>

#include "connorb/adjoint.hpp"
#include "connorb/dae.hpp"
#include "connorb/linalg.hpp"
#include "connorb/shooting.hpp"

namespace connorb {

/// The three half-line integrals of the 3D splitting computation,
///   int_0^t_cut psi_hat_1,  int_0^t_cut phi_hat_1 p_3,  int_0^t_cut phi_hat_1 p_1 p_2,
/// together with their Richardson error estimates.
struct HalfLineIntegrals {
    Eigen::Vector3d values;
    Eigen::Vector3d richardson;
};

/// Route A: from the bounded adjoint basis of the projected 3D integration.
HalfLineIntegrals half_line_integrals_from_basis(const AdjointBasis& basis, double t_cut);

/// Route B: from the reduced differential-algebraic computation.
HalfLineIntegrals half_line_integrals_from_dae(const DaeSystem& dae, double t_cut,
                                               const ToleranceConfig& tol);

/// Gronwall tail bounds for the remainders on [t0, infinity):
///   L ||psi_hat(t0)||,  |p_3(t0)| L ||phi_hat(t0)||,  |p_1 p_2|(t0) L ||phi_hat(t0)||,
/// with L = -||P|| ||P^-1|| / (a + ||P|| ||P^-1|| ||R(t0)||).  All norms are
/// infinity norms.  Preconditions (||R|| decreasing past t0, the decay of
/// |p_3| and |p_1 p_2|, and ||P|| ||P^-1|| ||R(t0)|| << |a|) are checked.
Eigen::Vector3d tail_bounds(const DaeSystem& dae, double t0, double norm_psi_t0,
                            double norm_phi_t0);

/// Melnikov matrix of the 3D heteroclinic splitting.  Row 1 pairs with phi,
/// row 2 with psi; columns are (lambda_1, lambda_2, lambda_3).
struct SplittingReport3D {
    Eigen::Matrix<double, 2, 3> xi;                 // parity-forced entries stored as exact 0
    std::array<std::array<bool, 3>, 2> parity_zeros;
    Eigen::Vector3d parity_residuals;               // symmetric quadrature of the forced zeros
    Eigen::Vector3d half_line;                      // the Table-1 comparables
    Eigen::Vector3d richardson;
    Eigen::Vector3d tails;                          // Table-2 comparables at t0 = t_cut
    Eigen::Matrix<double, 2, 3> budgets;            // per-entry tail + Richardson budget
    double t0 = 0.0;
    double kappa = 1.0;
    Eigen::Vector3d het_tangent;                    // (0, -xi_{1,l3}/xi_{1,l2}, 1)
    double genericity_det = 0.0;                    // -xi_{1,l2} xi_{2,l1}
    double genericity_det_cnu = 0.0;                // including the (c^2, nu) chart factor 2 c_k
    bool rank_ok = false;
    double norm_psi_t0 = 0.0, norm_phi_t0 = 0.0;
};

/// Computes the full 3D splitting report from an adjoint basis reaching at
/// least [-t_cut, t_cut].  Throws QuadratureError when a Richardson estimate
/// exceeds 1e-4.
SplittingReport3D xi_matrix_3d(const AdjointBasis& basis, double t_cut, double kappa);

struct SignVerdict {
    double value = 0.0;
    double budget = 0.0;
    bool holds = false;
};

/// Gradient of the 4D homoclinic splitting function at lambda = 0.
struct SplittingReport4D {
    Eigen::Vector4d xi;            // (xi_l1, 0, xi_l3, xi_l4)
    double xi_l3_by_parts = 0.0;   // -int p_3^2, the integration-by-parts route
    double ibp_gap = 0.0;          // |xi_l3 - xi_l3_by_parts|
    double parity_residual_l2 = 0.0;
    Eigen::Vector4d budgets;       // tail + Richardson per entry
    double kappa = 1.0;
    SignVerdict xi_l1_positive;
    SignVerdict xi_l3_negative;
    SignVerdict xi_l4_sign_kappa;
    SignVerdict xi_l1_minus_l3_positive;
    Eigen::Vector4d hom_tangent_normal;
    RankCheck rank_hom_dminus_l4;
    RankCheck rank_hom_dplus_l4;
    RankCheck rank_all_four;
    bool ranks_ok = false;
};

/// Requires a profile at P = -2 (lambda = 0).  xi_l2 is stored as exact zero
/// (odd integrand) and cross-checked by symmetric quadrature on the
/// reflection-extended grid.
SplittingReport4D xi_gradient_4d(const HomoclinicProfile& profile, double kappa);

} // namespace connorb
