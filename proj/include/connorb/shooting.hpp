#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "connorb/tolerance.hpp"
#include "connorb/trajectory.hpp"

namespace connorb {

/// Even homoclinic profile of u'''' + P u'' + u - u^2 = 0, stored as the
/// half-orbit (u, u', u'', u''') on [0, T]; the full orbit on [-T, T] follows
/// by the even reflection (u(-t) = u(t)), never by backward integration.
struct HomoclinicProfile {
    double P = -2.0;
    double u0 = 0.0;          // u(0)
    double u2_0 = 0.0;        // u''(0)
    double T = 0.0;           // stored horizon
    double T_match = 0.0;     // time at which the stable-subspace condition was imposed
    double boundary_residual = 0.0;   // ||projection of x(T_match) onto (E^s)^perp||_inf
    double terminal_gap = 0.0;        // same projection at t = T (equals the above when T = T_match)
    Trajectory trajectory;
};

struct ShootOptions {
    /// Newton seed (u(0), u''(0)); the sech^2 fit is used when absent.
    std::optional<std::pair<double, double>> seed;
    /// Cap on the matching horizon at the unit unstable rate.  The matching
    /// condition is imposed at min(T, match_cap / r_max(P)) because roundoff
    /// seeded near t = 0 reaches the boundary amplified by ~(1+T) e^{r_max T};
    /// beyond ~12/r_max that noise floor exceeds 1e-8 and Newton stalls.
    double match_cap = 12.0;
};

/// Shooting for the even homoclinic orbit.  Newton unknowns are (u(0), u''(0));
/// the residual is the projection of the state at the matching time onto the
/// orthogonal complement of the stable subspace of the origin's linearization
/// (an invariant-subspace projector, valid at the defective point P = -2).
/// The profile is extended to T by plain integration when T > T_match.
HomoclinicProfile shoot_homoclinic_4d(double P, double T, const ToleranceConfig& tol,
                                      const ShootOptions& opts = {});

struct ContinuationResult {
    std::vector<HomoclinicProfile> profiles;
    bool completed = false;
    std::string diagnostic;
};

/// Natural-parameter continuation in P, reusing each converged (u0, u''(0))
/// as the next Newton seed.  On failure returns the partial list.
ContinuationResult continuation_in_P(double P_start, double P_end, int steps, double T,
                                     const ToleranceConfig& tol);

/// Linearization of the P-family at the origin: companion matrix of
/// r^4 + P r^2 + 1.
Eigen::Matrix4d linearization_at_origin(double P);

/// Fast (largest |Re|) and slow rates of the linearization, P < 2.
std::pair<double, double> hyperbolic_rates(double P);

} // namespace connorb
