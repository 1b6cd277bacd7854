#include "connorb/hamiltonian.hpp"

#include <cmath>

#include "connorb/families.hpp"

namespace connorb {

CanonicalSystem build_canonical(int n, const Eigen::VectorXd& nu) {
    if (n < 4 || n % 2 != 0)
        throw PreconditionError("build_canonical: n must be even and >= 4");
    if (nu.size() != n)
        throw PreconditionError("build_canonical: nu must have length n");
    if (!in_reversibility_set(nu, 1e-10))
        throw PreconditionError("build_canonical: nu must lie in the reversibility set");
    if (nu[0] > 1e-10)
        throw PreconditionError("build_canonical: requires nu_1 <= 0");

    CanonicalSystem sys;
    const int m = n / 2;
    sys.m = m;
    sys.nu = nu;
    auto nu_odd = [&](int k) { return nu[2 * k]; };  // nu_{2k+1}, k = 0..m-1

    // b_1 = 1,  b_i = sum_{l=1}^{i-1} nu_{2(m-i+l)+1} b_l
    sys.b = Eigen::VectorXd::Zero(m);
    sys.b[0] = 1.0;
    for (int i = 2; i <= m; ++i) {
        double acc = 0.0;
        for (int l = 1; l <= i - 1; ++l) acc += nu_odd(m - i + l) * sys.b[l - 1];
        sys.b[i - 1] = acc;
    }

    // S_{ij} = -nu_{2(i+j)-1} for i+j <= m, 1 on the anti-diagonal, 0 below.
    sys.S = Eigen::MatrixXd::Zero(m, m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i + j < m + 1) sys.S(i - 1, j - 1) = -nu_odd(i + j - 1);
            else if (i + j == m + 1) sys.S(i - 1, j - 1) = 1.0;
        }

    // Lemma-style inverse: 1 on the anti-diagonal, b_{i+j-m} above it.
    sys.S_inv = Eigen::MatrixXd::Zero(m, m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i + j == m + 1) sys.S_inv(i - 1, j - 1) = 1.0;
            else if (i + j > m + 1) sys.S_inv(i - 1, j - 1) = sys.b[i + j - m - 1];
        }
    double id_err = (sys.S * sys.S_inv - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    if (id_err > 1e-12)
        throw NumericsError("build_canonical: recursion inverse check failed, |S S^-1 - I| = " +
                            std::to_string(id_err));

    // Potential coefficient table.
    sys.v_quad = Eigen::MatrixXd::Zero(m, m);
    sys.v_lin = Eigen::VectorXd::Zero(m);
    sys.v_lin[m - 1] = -nu[0];
    for (int k = 1; k <= m - 1; ++k) {
        sys.v_quad(m - 1, m - 1) += -0.5 * nu_odd(k) * sys.b[k];
        for (int i = m - k; i <= m - 1; ++i)
            sys.v_quad(i - 1, m - 1) += -nu_odd(k) * sys.b[i - m + k];
    }
    for (int j = 1; j <= m / 2; ++j) {
        sys.v_quad(m - j - 1, m - j - 1) += -0.5 * sys.b[m - 2 * j];
        for (int i = j; i <= m - j - 1; ++i)
            sys.v_quad(i - 1, m - j - 1) += -sys.b[i - 1];
    }
    return sys;
}

double potential_V(const Eigen::VectorXd& q, const CanonicalSystem& sys) {
    if (q.size() != sys.m) throw PreconditionError("potential_V: dim(q) != m");
    double v = sys.v_cubic * q[sys.m - 1] * q[sys.m - 1] * q[sys.m - 1];
    v += sys.v_lin.dot(q);
    for (int i = 0; i < sys.m; ++i)
        for (int j = i; j < sys.m; ++j) v += sys.v_quad(i, j) * q[i] * q[j];
    return v;
}

Eigen::VectorXd potential_V_gradient(const Eigen::VectorXd& q, const CanonicalSystem& sys) {
    if (q.size() != sys.m) throw PreconditionError("potential_V_gradient: dim(q) != m");
    Eigen::VectorXd g = sys.v_lin;
    g[sys.m - 1] += 3.0 * sys.v_cubic * q[sys.m - 1] * q[sys.m - 1];
    for (int i = 0; i < sys.m; ++i)
        for (int j = i; j < sys.m; ++j) {
            if (i == j) {
                g[i] += 2.0 * sys.v_quad(i, i) * q[i];
            } else {
                g[i] += sys.v_quad(i, j) * q[j];
                g[j] += sys.v_quad(i, j) * q[i];
            }
        }
    return g;
}

double hamiltonian_H(const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                     const CanonicalSystem& sys) {
    if (p.size() != sys.m) throw PreconditionError("hamiltonian_H: dim(p) != m");
    return 0.5 * p.dot(sys.S * p) + potential_V(q, sys);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> canonical_transform(const Eigen::VectorXd& y,
                                                                const CanonicalSystem& sys) {
    const int m = sys.m;
    if (y.size() != 2 * m) throw PreconditionError("canonical_transform: dim(y) != n");
    Eigen::VectorXd y_odd(m), p(m);
    for (int k = 0; k < m; ++k) {
        y_odd[k] = y[2 * k];
        p[k] = y[2 * k + 1];
    }
    return {sys.S * y_odd, p};
}

Eigen::VectorXd inverse_canonical_transform(const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                                            const CanonicalSystem& sys) {
    const int m = sys.m;
    if (q.size() != m || p.size() != m)
        throw PreconditionError("inverse_canonical_transform: dim mismatch");
    Eigen::VectorXd y_odd = sys.S_inv * q;
    Eigen::VectorXd y(2 * m);
    for (int k = 0; k < m; ++k) {
        y[2 * k] = y_odd[k];
        y[2 * k + 1] = p[k];
    }
    return y;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> canonical_field(const Eigen::VectorXd& q,
                                                            const Eigen::VectorXd& p,
                                                            const CanonicalSystem& sys) {
    return {sys.S * p, -potential_V_gradient(q, sys)};
}

double hamiltonian_on_state(const Eigen::VectorXd& y, const CanonicalSystem& sys) {
    auto [q, p] = canonical_transform(y, sys);
    return hamiltonian_H(q, p, sys);
}

double first_integral_4d(const Eigen::Vector4d& x, double eta3) {
    return 0.5 * x[0] * x[0] - x[0] * x[0] * x[0] / 3.0 - 0.5 * eta3 * x[1] * x[1] +
           x[1] * x[3] - 0.5 * x[2] * x[2];
}

Eigen::Vector4d first_integral_4d_gradient(const Eigen::Vector4d& x, double eta3) {
    return {x[0] - x[0] * x[0], x[3] - eta3 * x[1], -x[2], x[1]};
}

} // namespace connorb
