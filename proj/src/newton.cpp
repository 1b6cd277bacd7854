#include "connorb/newton.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "connorb/finite_diff.hpp"

namespace connorb {

Eigen::VectorXd newton_solve(const ResidualFn& residual, Eigen::VectorXd x,
                             const ToleranceConfig& tol, const NewtonOptions& opts) {
    tol.validate();
    Eigen::VectorXd r = residual(x);
    if (r.size() != x.size())
        throw PreconditionError("newton_solve: residual must map R^k to R^k");
    double rn = r.lpNorm<Eigen::Infinity>();

    for (int iter = 0; iter < tol.max_iters; ++iter) {
        if (rn <= tol.abs_tol) return x;

        Eigen::MatrixXd J = opts.jacobian ? opts.jacobian(x)
                                          : finite_difference_jacobian(residual, x);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
        lu.setThreshold(1e-13);
        if (!lu.isInvertible())
            throw SingularJacobian("newton_solve: singular Jacobian at iteration " +
                                   std::to_string(iter));
        Eigen::VectorXd dx = lu.solve(-r);
        if (opts.max_step_norm > 0.0) {
            double dn = dx.lpNorm<Eigen::Infinity>();
            if (dn > opts.max_step_norm) dx *= opts.max_step_norm / dn;
        }

        // backtracking guard against divergence
        double lambda = 1.0;
        bool improved = false;
        Eigen::VectorXd x_next, r_next;
        for (int k = 0; k < 12; ++k) {
            x_next = x + lambda * dx;
            r_next = residual(x_next);
            double rn_next = r_next.lpNorm<Eigen::Infinity>();
            if (std::isfinite(rn_next) && (rn_next < rn || rn_next <= tol.abs_tol)) {
                x = x_next;
                r = r_next;
                rn = rn_next;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!improved)
            throw ConvergenceError("newton_solve: iterates diverged (residual " +
                                   std::to_string(rn) + " would not decrease)");
    }
    if (rn <= tol.abs_tol) return x;
    throw ConvergenceError("newton_solve: max_iters exceeded, residual " + std::to_string(rn));
}

} // namespace connorb
