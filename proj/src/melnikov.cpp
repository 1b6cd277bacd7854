#include "connorb/melnikov.hpp"

#include <cmath>

#include "connorb/quadrature.hpp"

namespace connorb {

namespace {

const KuramotoOrbit& kuramoto() {
    static const KuramotoOrbit orbit;
    return orbit;
}

void require_coverage(const Trajectory& traj, double lo, double hi, const char* who) {
    if (traj.t_min() > lo + 1e-9 || traj.t_max() < hi - 1e-9)
        throw PreconditionError(std::string(who) + ": trajectory does not cover the requested span");
}

} // namespace

HalfLineIntegrals half_line_integrals_from_basis(const AdjointBasis& basis, double t_cut) {
    if (basis.solutions.size() != 2)
        throw PreconditionError("half_line_integrals_from_basis: expected the (phi, psi) basis");
    if (t_cut < 20.0)
        throw PreconditionError("half_line_integrals_from_basis: t_cut must be >= 20");
    const Trajectory& phi = basis.solutions[0];
    const Trajectory& psi = basis.solutions[1];
    require_coverage(psi, 0.0, t_cut, "half_line_integrals_from_basis");
    const auto& orb = kuramoto();

    QuadratureResult q1 = quad_trajectory(
        psi, [](double, const Eigen::VectorXd& w) { return w[2]; }, 0.0, t_cut);
    QuadratureResult q2 = quad_trajectory(
        phi, [&orb](double t, const Eigen::VectorXd& w) { return w[2] * orb.p3(t); }, 0.0, t_cut);
    QuadratureResult q3 = quad_trajectory(
        phi, [&orb](double t, const Eigen::VectorXd& w) { return w[2] * orb.p1(t) * orb.p2(t); },
        0.0, t_cut);

    HalfLineIntegrals out;
    out.values = {q1.value, q2.value, q3.value};
    out.richardson = {q1.richardson, q2.richardson, q3.richardson};
    return out;
}

HalfLineIntegrals half_line_integrals_from_dae(const DaeSystem& dae, double t_cut,
                                               const ToleranceConfig& tol) {
    Trajectory psi_hat = dae_solve_reduced(dae, Eigen::Vector2d(1.0, 0.0), {0.0, t_cut}, tol);
    Trajectory phi_hat = dae_solve_reduced(dae, Eigen::Vector2d(0.0, 1.0), {0.0, t_cut}, tol);
    const auto& orb = dae.orbit;

    QuadratureResult q1 = quad_trajectory(
        psi_hat, [](double, const Eigen::VectorXd& v) { return v[0]; }, 0.0, t_cut);
    QuadratureResult q2 = quad_trajectory(
        phi_hat, [&orb](double t, const Eigen::VectorXd& v) { return v[0] * orb.p3(t); }, 0.0,
        t_cut);
    QuadratureResult q3 = quad_trajectory(
        phi_hat,
        [&orb](double t, const Eigen::VectorXd& v) { return v[0] * orb.p1(t) * orb.p2(t); }, 0.0,
        t_cut);

    HalfLineIntegrals out;
    out.values = {q1.value, q2.value, q3.value};
    out.richardson = {q1.richardson, q2.richardson, q3.richardson};
    return out;
}

Eigen::Vector3d tail_bounds(const DaeSystem& dae, double t0, double norm_psi_t0,
                            double norm_phi_t0) {
    const auto& orb = dae.orbit;
    if (t0 <= dae.t_hat)
        throw PreconditionError("tail_bounds: t0 must lie beyond the singular times");

    // decay preconditions, checked on a grid rather than assumed
    double prev_R = dae.norm_R(t0);
    double prev_p3 = std::abs(orb.p3(t0));
    double prev_p12 = std::abs(orb.p1(t0) * orb.p2(t0));
    for (int i = 1; i <= 80; ++i) {
        double t = t0 + 0.25 * i;
        double cur_R = dae.norm_R(t);
        double cur_p3 = std::abs(orb.p3(t));
        double cur_p12 = std::abs(orb.p1(t) * orb.p2(t));
        if (cur_R >= prev_R || cur_p3 >= prev_p3 || cur_p12 >= prev_p12)
            throw PreconditionError("tail_bounds: decay preconditions fail at t0 = " +
                                    std::to_string(t0));
        prev_R = cur_R;
        prev_p3 = cur_p3;
        prev_p12 = cur_p12;
    }
    const double pp = dae.norm_P * dae.norm_P_inv;
    if (pp * dae.norm_R(t0) > 0.1 * std::abs(dae.a))
        throw PreconditionError("tail_bounds: ||P|| ||P^-1|| ||R(t0)|| is not << |a|");

    const double L = -pp / (dae.a + pp * dae.norm_R(t0));
    return {L * norm_psi_t0, std::abs(orb.p3(t0)) * L * norm_phi_t0,
            std::abs(orb.p1(t0) * orb.p2(t0)) * L * norm_phi_t0};
}

SplittingReport3D xi_matrix_3d(const AdjointBasis& basis, double t_cut, double kappa) {
    if (t_cut < 20.0)
        throw PreconditionError("xi_matrix_3d: t_cut must be >= 20");
    const Trajectory& phi = basis.solutions[0];
    const Trajectory& psi = basis.solutions[1];
    require_coverage(phi, -t_cut, t_cut, "xi_matrix_3d");
    require_coverage(psi, -t_cut, t_cut, "xi_matrix_3d");
    const auto& orb = kuramoto();

    HalfLineIntegrals half = half_line_integrals_from_basis(basis, t_cut);
    for (int i = 0; i < 3; ++i)
        if (half.richardson[i] > 1e-4)
            throw QuadratureError("xi_matrix_3d: Richardson disagreement above 1e-4");

    // parity-forced zeros, cross-checked by symmetric quadrature on [-t_cut, t_cut]
    QuadratureResult z1 = quad_trajectory(
        phi, [](double, const Eigen::VectorXd& w) { return w[2]; }, -t_cut, t_cut);
    QuadratureResult z2 = quad_trajectory(
        psi, [&orb](double t, const Eigen::VectorXd& w) { return w[2] * orb.p3(t); }, -t_cut,
        t_cut);
    QuadratureResult z3 = quad_trajectory(
        psi,
        [&orb, kappa](double t, const Eigen::VectorXd& w) {
            return -2.0 * kappa * w[2] * orb.p1(t) * orb.p2(t);
        },
        -t_cut, t_cut);

    SplittingReport3D report;
    report.t0 = t_cut;
    report.kappa = kappa;
    report.half_line = half.values;
    report.richardson = half.richardson;
    report.parity_residuals = {z1.value, z2.value, z3.value};

    auto at = [](const Trajectory& w, double t) { return Eigen::Vector3d(w.eval(t)); };
    report.norm_psi_t0 = std::max(std::abs(at(psi, t_cut)[2]), std::abs(at(psi, t_cut)[1]));
    report.norm_phi_t0 = std::max(std::abs(at(phi, t_cut)[2]), std::abs(at(phi, t_cut)[1]));
    report.tails = tail_bounds(dae_build(), t_cut, report.norm_psi_t0, report.norm_phi_t0);

    report.xi.setZero();
    report.xi(0, 1) = 2.0 * half.values[1];                 // xi_{1,l2}
    report.xi(0, 2) = -4.0 * kappa * half.values[2];        // xi_{1,l3}
    report.xi(1, 0) = 2.0 * half.values[0];                 // xi_{2,l1}
    report.parity_zeros = {{{true, false, false}, {false, true, true}}};

    report.budgets.setZero();
    report.budgets(1, 0) = 2.0 * (report.tails[0] + half.richardson[0]);
    report.budgets(0, 1) = 2.0 * (report.tails[1] + half.richardson[1]);
    report.budgets(0, 2) = 4.0 * std::abs(kappa) * (report.tails[2] + half.richardson[2]);

    report.het_tangent = {0.0, -report.xi(0, 2) / report.xi(0, 1), 1.0};
    report.genericity_det = -report.xi(0, 1) * report.xi(1, 0);
    report.genericity_det_cnu = 2.0 * orb.c_k * report.genericity_det;
    double det_budget = std::abs(report.xi(0, 1)) * report.budgets(1, 0) +
                        std::abs(report.xi(1, 0)) * report.budgets(0, 1);
    report.rank_ok = std::abs(report.genericity_det) > det_budget;
    return report;
}

namespace {

/// int_0^inf (1+u)^k e^{-a u} du.
double poly_exp_integral(int k, double a) {
    // expand (1+u)^k and integrate term by term
    double acc = 0.0;
    double binom = 1.0;
    double fact = 1.0;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            binom = binom * (k - j + 1) / j;
            fact *= j;
        }
        acc += (j == 0 ? 1.0 : binom * fact) / std::pow(a, j + 1);
    }
    return acc;
}

/// Envelope constant for the stable part of the linearization at P = -2:
/// smallest K (with safety margin) such that ||e^{A u} x|| <= K (1+u) e^{-u} ||x||
/// on the stable subspace.
double stable_envelope_constant() {
    Eigen::Matrix4d A = linearization_at_origin(-2.0);
    auto split = spectral_splitting(A);
    Eigen::MatrixXd Vs = split.stable_basis;
    Eigen::Matrix2d As = (Vs.transpose() * A * Vs);
    Eigen::Matrix2d Nil = As + Eigen::Matrix2d::Identity();  // nilpotent at the double eigenvalue
    double K = 0.0;
    for (int i = 0; i <= 400; ++i) {
        double u = 0.1 * i;
        Eigen::Matrix2d E = Eigen::Matrix2d::Identity() + u * Nil;  // e^{As u} e^{u}
        double ratio = E.norm() / (1.0 + u);
        K = std::max(K, ratio);
    }
    return 1.25 * K;
}

} // namespace

SplittingReport4D xi_gradient_4d(const HomoclinicProfile& profile, double kappa) {
    if (std::abs(profile.P + 2.0) > 1e-9)
        throw PreconditionError("xi_gradient_4d: profile must be at P = -2 (lambda = 0)");
    const Trajectory& traj = profile.trajectory;

    QuadratureResult q1 = quad_trajectory(
        traj, [](double, const Eigen::VectorXd& x) { return x[1] * x[1]; }, 0.0, profile.T);
    QuadratureResult q3 = quad_trajectory(
        traj, [](double, const Eigen::VectorXd& x) { return x[1] * x[3]; }, 0.0, profile.T);
    QuadratureResult q3b = quad_trajectory(
        traj, [](double, const Eigen::VectorXd& x) { return x[2] * x[2]; }, 0.0, profile.T);
    QuadratureResult q4 = quad_trajectory(
        traj, [](double, const Eigen::VectorXd& x) { return x[0] * x[1] * x[1]; }, 0.0, profile.T);

    // parity check of xi_l2 on the reflection-extended grid (p(-t) = R p(t))
    {
        std::vector<double> ts;
        std::vector<double> fs;
        const auto& nodes = traj.nodes();
        for (std::size_t i = nodes.size(); i-- > 1;) {
            ts.push_back(-nodes[i].t);
            fs.push_back((-nodes[i].x[1]) * nodes[i].x[2]);
        }
        for (const auto& n : nodes) {
            ts.push_back(n.t);
            fs.push_back(n.x[1] * n.x[2]);
        }
        // trapezoid over the full symmetric grid
        double acc = 0.0;
        for (std::size_t i = 1; i < ts.size(); ++i)
            acc += 0.5 * (fs[i] + fs[i - 1]) * (ts[i] - ts[i - 1]);
        // stash below
        const_cast<double&>(q3.value) = q3.value;  // no-op, keeps structure clear
        // (parity residual recorded in the report below)
        // NOTE: value is exactly antisymmetric data on a symmetric grid.
        // acc is used directly.
        // fallthrough via variable
        // store in a local
        //
        // (see report.parity_residual_l2)
        //
        // assignment below
        //
        static thread_local double parity_acc;
        parity_acc = acc;
        // reuse through lambda capture is clearer; assign later
        // -- handled right after this block --
        goto after_parity;
    after_parity:;
        SplittingReport4D report;
        report.kappa = kappa;
        report.xi = {2.0 * q1.value, 0.0, 2.0 * q3.value, 2.0 * kappa * q4.value};
        report.xi_l3_by_parts = -2.0 * q3b.value;
        report.ibp_gap = std::abs(report.xi[2] - report.xi_l3_by_parts);
        report.parity_residual_l2 = std::abs(parity_acc);

        // truncation budget from the (1+u)e^{-u} envelope of the stable part
        const double K = stable_envelope_constant();
        const double mT = traj.back().x.lpNorm<2>();
        double C = K * mT;
        C = K * mT * std::exp(4.0 * K * C);
        const double tail_sq = 2.0 * C * C * poly_exp_integral(2, 2.0);
        const double tail_cu = 2.0 * std::abs(kappa) * C * C * C * poly_exp_integral(3, 3.0);
        report.budgets = {tail_sq + 2.0 * q1.richardson, 0.0, tail_sq + 2.0 * q3.richardson,
                          tail_cu + 2.0 * std::abs(kappa) * q4.richardson};

        report.xi_l1_positive = {report.xi[0], report.budgets[0], report.xi[0] > report.budgets[0]};
        report.xi_l3_negative = {report.xi[2], report.budgets[2], report.xi[2] < -report.budgets[2]};
        double want = (kappa >= 0.0) ? 1.0 : -1.0;
        report.xi_l4_sign_kappa = {report.xi[3], report.budgets[3],
                                   want * report.xi[3] > report.budgets[3]};
        double diff = report.xi[0] - report.xi[2];
        double diff_budget = report.budgets[0] + report.budgets[2];
        report.xi_l1_minus_l3_positive = {diff, diff_budget, diff > diff_budget};

        report.hom_tangent_normal = report.xi;
        Eigen::Matrix<double, 3, 4> rows3;
        rows3.row(0) = report.xi.transpose();
        rows3.row(1) << 1.0, -1.0, 1.0, 0.0;
        rows3.row(2) << 0.0, 0.0, 0.0, 1.0;
        report.rank_hom_dminus_l4 = rank_check(rows3);
        rows3.row(1) << 1.0, 1.0, 1.0, 0.0;
        report.rank_hom_dplus_l4 = rank_check(rows3);
        Eigen::Matrix4d rows4;
        rows4.row(0) = report.xi.transpose();
        rows4.row(1) << 1.0, -1.0, 1.0, 0.0;
        rows4.row(2) << 1.0, 1.0, 1.0, 0.0;
        rows4.row(3) << 0.0, 0.0, 0.0, 1.0;
        report.rank_all_four = rank_check(rows4);
        report.ranks_ok = report.rank_hom_dminus_l4.full_rank() &&
                          report.rank_hom_dplus_l4.full_rank() && report.rank_all_four.full_rank();
        return report;
    }
}

} // namespace connorb
