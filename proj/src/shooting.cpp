#include "connorb/shooting.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "connorb/families.hpp"
#include "connorb/integrate.hpp"
#include "connorb/linalg.hpp"
#include "connorb/newton.hpp"

namespace connorb {

Eigen::Matrix4d linearization_at_origin(double P) {
    Eigen::Matrix4d A = Eigen::Matrix4d::Zero();
    A(0, 1) = A(1, 2) = A(2, 3) = 1.0;
    A(3, 0) = -1.0;
    A(3, 2) = -P;
    return A;
}

std::pair<double, double> hyperbolic_rates(double P) {
    if (P >= 2.0) throw PreconditionError("hyperbolic_rates: requires P < 2");
    if (P <= -2.0) {
        double disc = std::sqrt(P * P - 4.0);
        double fast = std::sqrt((-P + disc) / 2.0);
        double slow = std::sqrt((-P - disc) / 2.0);
        return {fast, slow};
    }
    double rho = std::sqrt(2.0 - P) / 2.0;  // |Re| of the complex quadruple
    return {rho, rho};
}

namespace {

FourDParams params_for_P(double P) {
    FourDParams fp;
    fp.lambda = Eigen::Vector4d(0.0, -P - 2.0, 0.0, 0.0);  // eta_3 = -P
    return fp;
}

VectorField field_for_P(double P) {
    FourDParams fp = params_for_P(P);
    return [fp](double, const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return four_d_translated_rhs(Eigen::Vector4d(x), fp);
    };
}

/// Orthonormal rows annihilating the stable subspace of the linearization.
Eigen::MatrixXd unstable_projection_rows(double P) {
    auto split = spectral_splitting(linearization_at_origin(P));
    if (split.stable_dim != 2)
        throw NumericsError("shoot_homoclinic_4d: stable subspace is not 2-dimensional");
    return split.stable_complement.transpose();
}

std::pair<double, double> sech2_seed(double P) {
    auto [fast, slow] = hyperbolic_rates(P);
    (void)fast;
    double b = 0.5 * slow;
    return {1.5, -3.0 * b * b};
}

} // namespace

HomoclinicProfile shoot_homoclinic_4d(double P, double T, const ToleranceConfig& tol,
                                      const ShootOptions& opts) {
    if (P < -3.0 || P > -1.5)
        throw PreconditionError("shoot_homoclinic_4d: P outside validated window [-3, -1.5]");
    tol.validate();
    auto [r_fast, r_slow] = hyperbolic_rates(P);
    if (r_slow < 1e-3)
        throw PreconditionError("shoot_homoclinic_4d: origin is not sufficiently hyperbolic");

    const double T_match = std::min(T, opts.match_cap / r_fast);
    const Eigen::MatrixXd N = unstable_projection_rows(P);
    VectorField field = field_for_P(P);

    ToleranceConfig itol = tol;
    itol.max_step = std::min(tol.max_step, 0.05);

    auto residual_at = [&](const Eigen::VectorXd& z, double t_end) -> Eigen::VectorXd {
        Eigen::VectorXd x0(4);
        x0 << z[0], 0.0, z[1], 0.0;
        Trajectory traj = integrate(field, x0, {0.0, t_end}, itol);
        return N * traj.back().x;
    };

    ToleranceConfig ntol = tol;
    ntol.max_iters = std::max(tol.max_iters, 40);

    Eigen::VectorXd z(2);
    if (opts.seed) {
        z << opts.seed->first, opts.seed->second;
        z = newton_solve([&](const Eigen::VectorXd& w) { return residual_at(w, T_match); }, z,
                         ntol, {.jacobian = {}, .max_step_norm = 0.25});
    } else {
        auto [u0g, w0g] = sech2_seed(P);
        z << u0g, w0g;
        // homotopy in the matching horizon: short horizons have wide Newton basins
        for (double Tk : {3.0, 5.0, 8.0, T_match}) {
            if (Tk > T_match) continue;
            z = newton_solve([&](const Eigen::VectorXd& w) { return residual_at(w, Tk); }, z,
                             ntol, {.jacobian = {}, .max_step_norm = 0.5});
        }
    }

    HomoclinicProfile profile;
    profile.P = P;
    profile.u0 = z[0];
    profile.u2_0 = z[1];
    profile.T = T;
    profile.T_match = T_match;

    Eigen::VectorXd x0(4);
    x0 << z[0], 0.0, z[1], 0.0;
    ToleranceConfig ftol = itol;
    ftol.max_step = std::min(itol.max_step, 0.01);  // dense node grid for the quadratures
    profile.trajectory = integrate(field, x0, {0.0, T}, ftol);
    profile.boundary_residual = (N * profile.trajectory.eval(T_match)).lpNorm<Eigen::Infinity>();
    profile.terminal_gap = (N * profile.trajectory.back().x).lpNorm<Eigen::Infinity>();
    return profile;
}

ContinuationResult continuation_in_P(double P_start, double P_end, int steps, double T,
                                     const ToleranceConfig& tol) {
    if (steps < 1) throw PreconditionError("continuation_in_P: steps must be >= 1");
    ContinuationResult result;
    std::optional<std::pair<double, double>> seed;
    for (int k = 0; k <= steps; ++k) {
        double P = (steps == 0) ? P_start
                                : P_start + (P_end - P_start) * static_cast<double>(k) / steps;
        try {
            ShootOptions opts;
            opts.seed = seed;
            HomoclinicProfile prof = shoot_homoclinic_4d(P, T, tol, opts);
            seed = {prof.u0, prof.u2_0};
            result.profiles.push_back(std::move(prof));
        } catch (const NumericsError& err) {
            result.completed = false;
            result.diagnostic = "continuation stopped at P = " + std::to_string(P) + ": " + err.what();
            return result;
        }
        if (P_start == P_end) break;
    }
    result.completed = true;
    return result;
}

} // namespace connorb
