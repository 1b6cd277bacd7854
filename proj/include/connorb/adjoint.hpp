#pragma once

#include <Eigen/Core>
#include <vector>

#include "connorb/kuramoto.hpp"
#include "connorb/shooting.hpp"
#include "connorb/tolerance.hpp"
#include "connorb/trajectory.hpp"

namespace connorb {

/// Bounded solutions of the adjoint variational equation along a connecting
/// orbit.  Each trajectory satisfies w' = -Df(p(t))^T w and stays orthogonal
/// to the flow direction f(p(t)).
struct AdjointBasis {
    std::vector<Trajectory> solutions;          // covering [-T, T]
    std::vector<Eigen::VectorXd> initial_conditions;
    int d = 0;
};

/// Adjoint equation of the Michelson system along the Kuramoto orbit:
///   w_1' = p_1 w_3,  w_2' = -w_1 + w_3,  w_3' = -w_2.
Eigen::Vector3d michelson_adjoint_rhs(const KuramotoOrbit& orbit, double t,
                                      const Eigen::Vector3d& w);

/// The two bounded solutions phi, psi along the Kuramoto orbit on [-T, T],
/// integrated forward and backward from the reversibility-adapted initial
/// conditions phi(0) = (0, -1, 0) and psi(0) = (1 - c_k^2/p_2(0), 0, 1) with
/// per-step projection of the state back onto f(p(t))^perp.  d = 2.
AdjointBasis adjoint_basis_michelson(double T, const ToleranceConfig& tol);

/// The unique bounded adjoint solution along the 4D homoclinic orbit,
///   psi(t) = grad H(p(t)) = (p_1 - p_1^2, p_4 - 2 p_2, -p_3, p_2),
/// evaluated in closed form at the profile's nodes (valid at eta_3 = 2,
/// i.e. P = -2).
Trajectory adjoint_psi_4d(const HomoclinicProfile& profile);

/// Number of linearly independent bounded adjoint solutions of a
/// non-degenerate connecting orbit: n - dim W^s(p+) - dim W^u(p-) + 1.
int bounded_solution_count(int n, int dim_ws_plus, int dim_wu_minus);

} // namespace connorb
