#include "connorb/adjoint.hpp"

#include <cmath>

#include "connorb/hamiltonian.hpp"
#include "connorb/integrate.hpp"

namespace connorb {

Eigen::Vector3d michelson_adjoint_rhs(const KuramotoOrbit& orbit, double t,
                                      const Eigen::Vector3d& w) {
    return {orbit.p1(t) * w[2], -w[0] + w[2], -w[1]};
}

AdjointBasis adjoint_basis_michelson(double T, const ToleranceConfig& tol) {
    if (T < 20.0)
        throw PreconditionError("adjoint_basis_michelson: requires T >= 20");
    tol.validate();
    KuramotoOrbit orbit;

    VectorField rhs = [orbit](double t, const Eigen::VectorXd& w) -> Eigen::VectorXd {
        return michelson_adjoint_rhs(orbit, t, Eigen::Vector3d(w));
    };
    // All bounded adjoint solutions live in f(p(t))^perp; the inner product
    // <w, f(p(t))> is conserved, so projecting each accepted step removes the
    // (exponentially growing) complementary mode seeded by roundoff.
    IntegrateOptions opts;
    opts.post_step = [orbit](double t, Eigen::VectorXd& w) {
        Eigen::Vector3d f = orbit.field_on_orbit(t);
        double drift = w.dot(f) / f.squaredNorm();
        if (std::abs(w.dot(f)) > 1e-6 * std::max(1.0, w.norm()))
            throw ConstraintViolation(
                "adjoint_basis_michelson: orthogonality drift exceeded 1e-6 before projection");
        w -= drift * f;
    };

    ToleranceConfig itol = tol;
    itol.max_step = std::min(tol.max_step, 0.005);

    AdjointBasis basis;
    basis.d = 2;
    Eigen::Vector3d phi0(0.0, -1.0, 0.0);
    Eigen::Vector3d psi0(1.0 - orbit.c_k * orbit.c_k / orbit.p2(0.0), 0.0, 1.0);
    for (const Eigen::Vector3d& w0 : {phi0, psi0}) {
        Trajectory fwd = integrate(rhs, w0, {0.0, T}, itol, opts);
        Trajectory bwd = integrate(rhs, w0, {0.0, -T}, itol, opts);
        basis.solutions.push_back(Trajectory::merge(bwd, fwd));
        basis.initial_conditions.push_back(w0);
    }
    return basis;
}

Trajectory adjoint_psi_4d(const HomoclinicProfile& profile) {
    const double eta3 = -profile.P;  // equals 2 at the double-eigenvalue point
    std::vector<double> ts;
    std::vector<Eigen::VectorXd> ws, dws;
    ts.reserve(profile.trajectory.size());
    for (const auto& node : profile.trajectory.nodes()) {
        const Eigen::Vector4d p = node.x;
        Eigen::Vector4d psi = first_integral_4d_gradient(p, eta3);
        // psi' = Hess H(p) f(p)
        double p4dot = -p[0] + eta3 * p[2] + p[0] * p[0];
        Eigen::Vector4d dpsi((1.0 - 2.0 * p[0]) * p[1], p4dot - eta3 * p[2], -p[3], p[2]);
        ts.push_back(node.t);
        ws.push_back(psi);
        dws.push_back(dpsi);
    }
    return Trajectory::from_samples(ts, ws, dws);
}

int bounded_solution_count(int n, int dim_ws_plus, int dim_wu_minus) {
    return n - dim_ws_plus - dim_wu_minus + 1;
}

} // namespace connorb
