#include "connorb/families.hpp"

#include <cmath>

namespace connorb {

Eigen::VectorXd limit_family_rhs(const Eigen::VectorXd& y, const Eigen::VectorXd& nu) {
    const Eigen::Index n = nu.size();
    if (y.size() != n)
        throw PreconditionError("limit_family_rhs: dim(y) != dim(nu)");
    Eigen::VectorXd f(n);
    for (Eigen::Index k = 0; k + 1 < n; ++k) f[k] = y[k + 1];
    double last = nu[0] + y[0] * y[0];
    for (Eigen::Index k = 1; k < n; ++k) last += nu[k] * y[k];
    f[n - 1] = last;
    return f;
}

Eigen::MatrixXd limit_family_jacobian(const Eigen::VectorXd& y, const Eigen::VectorXd& nu) {
    const Eigen::Index n = nu.size();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k + 1 < n; ++k) J(k, k + 1) = 1.0;
    J(n - 1, 0) = 2.0 * y[0];
    for (Eigen::Index k = 1; k < n; ++k) J(n - 1, k) += nu[k];
    return J;
}

Eigen::VectorXd rescaled_family_rhs(const Eigen::VectorXd& y, const RescaledParams& params) {
    params.validate();
    Eigen::VectorXd f = limit_family_rhs(y, params.nu);
    f[f.size() - 1] += params.epsilon * params.kappa * y[0] * y[1];
    if (params.remainder) f[f.size() - 1] += params.remainder(y, params.epsilon);
    return f;
}

Eigen::Vector3d michelson_rhs(const Eigen::Vector3d& x, const MichelsonParams& p) {
    return {x[1], x[2],
            p.c * p.c - x[1] + p.nu3_bar * x[2] - 0.5 * x[0] * x[0] -
                2.0 * p.epsilon * p.kappa * x[0] * x[1]};
}

Eigen::Matrix3d michelson_jacobian(const Eigen::Vector3d& x, const MichelsonParams& p) {
    Eigen::Matrix3d J = Eigen::Matrix3d::Zero();
    J(0, 1) = 1.0;
    J(1, 2) = 1.0;
    J(2, 0) = -x[0] - 2.0 * p.epsilon * p.kappa * x[1];
    J(2, 1) = -1.0 - 2.0 * p.epsilon * p.kappa * x[0];
    J(2, 2) = p.nu3_bar;
    return J;
}

Eigen::Vector4d four_d_translated_rhs(const Eigen::Vector4d& x, const FourDParams& p) {
    const auto& l = p.lambda;
    return {x[1], x[2], x[3],
            -x[0] + l[0] * x[1] + (2.0 + l[1]) * x[2] + l[2] * x[3] + x[0] * x[0] +
                l[3] * p.kappa * x[0] * x[1]};
}

Eigen::Matrix4d four_d_translated_jacobian(const Eigen::Vector4d& x, const FourDParams& p) {
    const auto& l = p.lambda;
    Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
    J(0, 1) = 1.0;
    J(1, 2) = 1.0;
    J(2, 3) = 1.0;
    J(3, 0) = -1.0 + 2.0 * x[0] + l[3] * p.kappa * x[1];
    J(3, 1) = l[0] + l[3] * p.kappa * x[0];
    J(3, 2) = 2.0 + l[1];
    J(3, 3) = l[2];
    return J;
}

Eigen::VectorXd unscaled_unfolding_rhs(
    const Eigen::VectorXd& x, const UnfoldingParams& params,
    const std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>& h) {
    params.validate();
    const Eigen::Index n = params.n;
    if (x.size() != n)
        throw PreconditionError("unscaled_unfolding_rhs: dim(x) != n");
    Eigen::VectorXd f(n);
    for (Eigen::Index k = 0; k + 1 < n; ++k) f[k] = x[k + 1];
    double last = params.mu[0] + x[0] * x[0];
    for (Eigen::Index k = 1; k < n; ++k) last += params.mu[k] * x[k];
    last += h ? h(x, params.mu) : params.kappa * x[0] * x[1];
    f[n - 1] = last;
    return f;
}

Eigen::VectorXd involution_R(int n) {
    if (n < 3) throw PreconditionError("involution_R: n must be >= 3");
    Eigen::VectorXd d(n);
    for (int k = 1; k <= n; ++k) d[k - 1] = ((n - k + 1) % 2 == 0) ? 1.0 : -1.0;
    return d;
}

Eigen::VectorXd apply_involution(const Eigen::VectorXd& y) {
    return involution_R(static_cast<int>(y.size())).cwiseProduct(y);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> sign_symmetry(const Eigen::VectorXd& nu,
                                                          const Eigen::VectorXd& y) {
    if (nu.size() != y.size())
        throw PreconditionError("sign_symmetry: dim mismatch");
    const int n = static_cast<int>(nu.size());
    Eigen::VectorXd d = involution_R(n);
    Eigen::VectorXd nu2 = nu;
    for (int k = 2; k <= n; ++k) nu2[k - 1] = d[k - 1] * nu[k - 1];
    return {nu2, d.cwiseProduct(y)};
}

bool in_reversibility_set(const Eigen::VectorXd& nu, double tol) {
    const int n = static_cast<int>(nu.size());
    for (int i = 0; i <= (n - 2) / 2; ++i) {
        int idx = n - 2 * i;  // 1-based component nu_{n-2i}
        if (std::abs(nu[idx - 1]) > tol) return false;
    }
    return true;
}

MonotoneFunctional monotone_functional_L(const Eigen::VectorXd& y, const Eigen::VectorXd& nu) {
    const Eigen::Index n = nu.size();
    if (y.size() != n) throw PreconditionError("monotone_functional_L: dim mismatch");
    double v = y[n - 1];
    for (Eigen::Index k = 2; k <= n; ++k) v -= nu[k - 1] * y[k - 2];
    return {v, nu[0] + y[0] * y[0]};
}

RescaledPoint rescale(const Eigen::VectorXd& mu, const Eigen::VectorXd& x) {
    const int n = static_cast<int>(mu.size());
    if (x.size() != n) throw PreconditionError("rescale: dim mismatch");
    if (mu.norm() == 0.0) throw PreconditionError("rescale: mu = 0 has no spherical chart");

    auto exponent = [n](int k) { return (k == 1) ? 2 * n : n - k + 1; };
    // sum_k (mu_k / eps^{e_k})^2 = 1 is strictly decreasing in eps
    auto norm2_at = [&](double eps) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) {
            double v = mu[k - 1] / std::pow(eps, exponent(k));
            s += v * v;
        }
        return s;
    };
    double lo = 1e-8, hi = 1.0;
    while (norm2_at(lo) < 1.0) lo *= 0.5;
    while (norm2_at(hi) > 1.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (norm2_at(mid) > 1.0 ? lo : hi) = mid;
    }
    double eps = 0.5 * (lo + hi);

    RescaledPoint out;
    out.epsilon = eps;
    out.nu.resize(n);
    out.y.resize(n);
    for (int k = 1; k <= n; ++k) {
        out.nu[k - 1] = mu[k - 1] / std::pow(eps, exponent(k));
        out.y[k - 1] = x[k - 1] / std::pow(eps, n + k - 1);
    }
    return out;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> unrescale(const Eigen::VectorXd& nu, double epsilon,
                                                      const Eigen::VectorXd& y) {
    const int n = static_cast<int>(nu.size());
    if (y.size() != n) throw PreconditionError("unrescale: dim mismatch");
    Eigen::VectorXd mu(n), x(n);
    mu[0] = std::pow(epsilon, 2 * n) * nu[0];
    for (int k = 2; k <= n; ++k) mu[k - 1] = std::pow(epsilon, n - k + 1) * nu[k - 1];
    for (int k = 1; k <= n; ++k) x[k - 1] = std::pow(epsilon, n + k - 1) * y[k - 1];
    return {mu, x};
}

MichelsonParams michelson_from_directional(double nu1_bar, double nu3_bar, double epsilon,
                                           double kappa) {
    if (nu1_bar >= 0.0)
        throw PreconditionError("michelson_from_directional: requires nu1_bar < 0");
    MichelsonParams p;
    p.c = std::sqrt(-2.0 * nu1_bar);
    p.nu3_bar = nu3_bar;
    p.epsilon = epsilon;
    p.kappa = kappa;
    return p;
}

} // namespace connorb
