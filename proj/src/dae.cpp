#include "connorb/dae.hpp"

#include <algorithm>
#include <cmath>

#include "connorb/adjoint.hpp"
#include "connorb/integrate.hpp"

namespace connorb {

Eigen::Matrix2d DaeSystem::A(double t) const {
    Eigen::Matrix2d m;
    m << 1.0, 0.0, 0.0, orbit.p2(t);
    return m;
}

Eigen::Matrix2d DaeSystem::B(double t) const {
    Eigen::Matrix2d m;
    m << 0.0, 1.0, 0.5 * orbit.p1(t) * orbit.p1(t) - orbit.c_k * orbit.c_k, orbit.p3(t);
    return m;
}

Eigen::Matrix2d DaeSystem::R(double t) const {
    // Exact rational forms of A^{-1}B - Q in s = tanh(beta t).  The naive
    // difference loses all digits past t ~ 35 because numerator and limit
    // cancel to machine precision; these forms carry the factor (1 - s).
    double s = orbit.s(t);
    double oms = orbit.one_minus_s(t);
    double s2 = s * s;
    double den = 11.0 * s2 - 3.0;  // vanishes exactly at the singular times
    double r21 = 11.0 * orbit.alpha * (1.0 + s) * oms * (11.0 * s2 - 2.0) /
                 (6.0 * orbit.beta * den);
    double r22 = 2.0 * orbit.beta * oms * (22.0 * s2 + 11.0 * s - 3.0) / den;
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    m(1, 0) = r21;
    m(1, 1) = r22;
    return m;
}

double DaeSystem::norm_R(double t) const {
    Eigen::Matrix2d m = R(t);
    return std::abs(m(1, 0)) + std::abs(m(1, 1));
}

DaeSystem dae_build() {
    DaeSystem dae;
    dae.t_hat = std::atanh(std::sqrt(3.0 / 11.0)) / dae.orbit.beta;

    dae.Q << 0.0, 1.0, -30.0 / 19.0, -std::sqrt(11.0 / 19.0);

    const double s209 = std::sqrt(209.0), s2071 = std::sqrt(2071.0);
    dae.a = -s209 / 38.0;
    std::complex<double> lam_plus(-s209 / 38.0, s2071 / 38.0);
    dae.P_eig << std::complex<double>(-s209 / 60.0, -s2071 / 60.0),
        std::complex<double>(-s209 / 60.0, s2071 / 60.0), std::complex<double>(1.0, 0.0),
        std::complex<double>(1.0, 0.0);

    // eigen-decomposition consistency: Q P = P diag(lam+, lam-)
    Eigen::Matrix2cd D = Eigen::Matrix2cd::Zero();
    D(0, 0) = lam_plus;
    D(1, 1) = std::conj(lam_plus);
    if ((dae.Q.cast<std::complex<double>>() * dae.P_eig - dae.P_eig * D).cwiseAbs().maxCoeff() >
        1e-12)
        throw NumericsError("dae_build: eigenvector matrix check failed");

    auto inf_norm = [](const Eigen::Matrix2cd& M) {
        double r0 = std::abs(M(0, 0)) + std::abs(M(0, 1));
        double r1 = std::abs(M(1, 0)) + std::abs(M(1, 1));
        return std::max(r0, r1);
    };
    dae.norm_P = inf_norm(dae.P_eig);
    dae.norm_P_inv = inf_norm(dae.P_eig.inverse());
    // closed forms from the asymptotic analysis, kept as hard checks
    if (std::abs(dae.norm_P - 2.0) > 1e-12)
        throw NumericsError("dae_build: ||P|| != 2");
    if (std::abs(dae.norm_P_inv - (std::sqrt(30.0 / 109.0) + 30.0 / s2071)) > 1e-12)
        throw NumericsError("dae_build: ||P^-1|| != sqrt(30/109) + 30/sqrt(2071)");
    return dae;
}

double dae_recover_w1(const DaeSystem& dae, double t, const Eigen::Vector2d& v) {
    const auto& orb = dae.orbit;
    double f3 = orb.c_k * orb.c_k - orb.p2(t) - 0.5 * orb.p1(t) * orb.p1(t);
    return (orb.p3(t) * v[1] - f3 * v[0]) / orb.p2(t);
}

namespace {

struct Piece {
    double lo, hi;
    bool lifted;  // integrate the 3D adjoint equation instead of the reduced ODE
};

std::vector<Piece> plan_pieces(const DaeSystem& dae, double ta, double tb, double window) {
    const double lo = std::min(ta, tb), hi = std::max(ta, tb);
    std::vector<Piece> pieces;
    double cursor = lo;
    for (double th : dae.singular_times()) {
        if (th <= lo + 1e-12 || th >= hi - 1e-12) {
            if (th > lo - 1e-3 && th < lo + 1e-3)
                throw PreconditionError("dae_solve_reduced: span endpoint too close to a singular time");
            if (th > hi - 1e-3 && th < hi + 1e-3)
                throw PreconditionError("dae_solve_reduced: span endpoint too close to a singular time");
            continue;
        }
        double wlo = std::max(cursor, th - window);
        double whi = std::min(hi, th + window);
        if (wlo > cursor) pieces.push_back({cursor, wlo, false});
        pieces.push_back({wlo, whi, true});
        cursor = whi;
    }
    if (cursor < hi) pieces.push_back({cursor, hi, false});
    if (ta > tb) {
        std::reverse(pieces.begin(), pieces.end());
        for (auto& p : pieces) std::swap(p.lo, p.hi);
    }
    return pieces;
}

Trajectory v_trajectory_from_lifted(const DaeSystem& dae, const Trajectory& wtraj) {
    std::vector<double> ts;
    std::vector<Eigen::VectorXd> vs, dvs;
    for (const auto& node : wtraj.nodes()) {
        const Eigen::Vector3d w = node.x;
        ts.push_back(node.t);
        vs.push_back(Eigen::Vector2d(w[2], -w[1]));
        dvs.push_back(Eigen::Vector2d(-w[1], w[0] - w[2]));
    }
    return Trajectory::from_samples(ts, vs, dvs);
}

} // namespace

Trajectory dae_solve_reduced(const DaeSystem& dae, const Eigen::Vector2d& v0,
                             std::pair<double, double> span, const ToleranceConfig& tol) {
    tol.validate();
    const double ta = span.first, tb = span.second;
    if (ta == tb) throw PreconditionError("dae_solve_reduced: degenerate span");

    const auto& orb = dae.orbit;
    VectorField vfield = [&orb, &dae](double t, const Eigen::VectorXd& v) -> Eigen::VectorXd {
        Eigen::Vector2d rhs;
        rhs[0] = v[1];
        rhs[1] = ((0.5 * orb.p1(t) * orb.p1(t) - orb.c_k * orb.c_k) * v[0] + orb.p3(t) * v[1]) /
                 orb.p2(t);
        return rhs;
    };
    VectorField wfield = [&orb](double t, const Eigen::VectorXd& w) -> Eigen::VectorXd {
        return michelson_adjoint_rhs(orb, t, Eigen::Vector3d(w));
    };

    ToleranceConfig itol = tol;
    itol.max_step = std::min(tol.max_step, 0.005);

    std::vector<Piece> pieces = plan_pieces(dae, ta, tb, 0.25);
    Eigen::Vector2d v = v0;
    std::vector<Trajectory> parts;
    for (const auto& piece : pieces) {
        if (!piece.lifted) {
            Trajectory seg = integrate(vfield, v, {piece.lo, piece.hi}, itol);
            v = (piece.hi > piece.lo) ? seg.back().x : seg.front().x;
            parts.push_back(std::move(seg));
        } else {
            Eigen::Vector3d w(dae_recover_w1(dae, piece.lo, v), -v[1], v[0]);
            Trajectory wseg = integrate(wfield, w, {piece.lo, piece.hi}, itol);
            const Eigen::Vector3d w_end =
                (piece.hi > piece.lo) ? wseg.back().x : wseg.front().x;
            Eigen::Vector3d f(orb.p2(piece.hi), orb.p3(piece.hi),
                              orb.c_k * orb.c_k - orb.p2(piece.hi) -
                                  0.5 * orb.p1(piece.hi) * orb.p1(piece.hi));
            if (std::abs(w_end.dot(f)) > 1e-6 * std::max(1.0, w_end.norm()))
                throw ConstraintViolation(
                    "dae_solve_reduced: orthogonality constraint violated at handoff");
            v = Eigen::Vector2d(w_end[2], -w_end[1]);
            parts.push_back(v_trajectory_from_lifted(dae, wseg));
        }
    }

    // assemble in ascending time regardless of integration direction
    if (ta > tb) std::reverse(parts.begin(), parts.end());
    Trajectory out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = Trajectory::merge(out, parts[i]);
    return out;
}

} // namespace connorb
