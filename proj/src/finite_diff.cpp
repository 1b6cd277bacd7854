#include "connorb/finite_diff.hpp"

#include <cmath>
#include <limits>

#include "connorb/errors.hpp"

namespace connorb {

namespace {
double default_step(double xi) {
    static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    return h0 * std::max(1.0, std::abs(xi));
}
} // namespace

Eigen::MatrixXd finite_difference_jacobian(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double h) {
    Eigen::VectorXd xp = x, xm = x;
    Eigen::MatrixXd J;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        double hj = (h > 0.0) ? h : default_step(x[j]);
        xp[j] = x[j] + hj;
        xm[j] = x[j] - hj;
        Eigen::VectorXd fp = f(xp);
        Eigen::VectorXd fm = f(xm);
        if (!fp.allFinite() || !fm.allFinite())
            throw NonFiniteState("finite_difference_jacobian: non-finite evaluation");
        if (J.size() == 0) J.resize(fp.size(), x.size());
        J.col(j) = (fp - fm) / (2.0 * hj);
        xp[j] = x[j];
        xm[j] = x[j];
    }
    return J;
}

Eigen::VectorXd finite_difference_gradient(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double h) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd xp = x, xm = x;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        double hj = (h > 0.0) ? h : default_step(x[j]);
        xp[j] = x[j] + hj;
        xm[j] = x[j] - hj;
        double fp = f(xp);
        double fm = f(xm);
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw NonFiniteState("finite_difference_gradient: non-finite evaluation");
        g[j] = (fp - fm) / (2.0 * hj);
        xp[j] = x[j];
        xm[j] = x[j];
    }
    return g;
}

} // namespace connorb
