#include "connorb/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "connorb/errors.hpp"

namespace connorb {

Eigen::MatrixXd companion_from_last_row(const Eigen::VectorXd& last_row) {
    const Eigen::Index n = last_row.size();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
    A.row(n - 1) = last_row.transpose();
    return A;
}

std::vector<std::complex<double>> sorted_eigenvalues(const Eigen::MatrixXd& A) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
    std::vector<std::complex<double>> ev(A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) ev[i] = es.eigenvalues()[i];
    std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

std::complex<double> eval_monic(const Eigen::VectorXd& last_row, std::complex<double> z) {
    std::complex<double> acc = 1.0;
    for (Eigen::Index k = last_row.size(); k-- > 0;)
        acc = acc * z - last_row[k];
    return acc;
}

SpectralSplitting spectral_splitting(const Eigen::MatrixXd& A) {
    const Eigen::Index n = A.rows();
    double re_min = 1e300;
    for (const auto& ev : sorted_eigenvalues(A)) re_min = std::min(re_min, std::abs(ev.real()));
    if (re_min < 1e-9)
        throw PreconditionError("spectral_splitting: matrix has an eigenvalue too close to the imaginary axis");

    // scaled Newton iteration S <- (S/d + d S^{-1}) / 2, d = |det S|^{1/n}
    Eigen::MatrixXd S = A;
    for (int it = 0; it < 100; ++it) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(S);
        if (!lu.isInvertible())
            throw SingularJacobian("spectral_splitting: sign iteration hit a singular matrix");
        double d = std::pow(std::abs(lu.determinant()), 1.0 / static_cast<double>(n));
        Eigen::MatrixXd Snew = 0.5 * (S / d + d * lu.inverse());
        double delta = (Snew - S).norm() / std::max(1.0, S.norm());
        S = Snew;
        if (delta < 1e-14) break;
    }

    SpectralSplitting out;
    Eigen::MatrixXd Ps = 0.5 * (Eigen::MatrixXd::Identity(n, n) - S);
    Eigen::MatrixXd Pu = 0.5 * (Eigen::MatrixXd::Identity(n, n) + S);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd_s(Ps, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd_u(Pu, Eigen::ComputeFullU | Eigen::ComputeFullV);
    int ks = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (svd_s.singularValues()[i] > 0.5) ++ks;
    out.stable_dim = ks;
    out.stable_basis = svd_s.matrixU().leftCols(ks);
    out.unstable_basis = svd_u.matrixU().leftCols(n - ks);
    // (E^s)^perp = row space of Pu
    out.stable_complement = svd_u.matrixV().leftCols(n - ks);
    return out;
}

RankCheck rank_check(const Eigen::MatrixXd& rows) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
    RankCheck rc;
    rc.sigma_max = svd.singularValues()[0];
    rc.sigma_min = svd.singularValues()[svd.singularValues().size() - 1];
    return rc;
}

} // namespace connorb
