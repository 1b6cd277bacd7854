#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace connorb {

/// Companion matrix of the monic polynomial
///   r^n - c[n-1] r^{n-1} - ... - c[1] r - c[0]
/// in the nilpotent-chain convention: superdiagonal ones, last row = c.
Eigen::MatrixXd companion_from_last_row(const Eigen::VectorXd& last_row);

/// Eigenvalues of a real matrix, sorted by (Re, Im) for determinism.
std::vector<std::complex<double>> sorted_eigenvalues(const Eigen::MatrixXd& A);

/// Evaluate the monic polynomial r^n - c[n-1] r^{n-1} - ... - c[0] at z.
std::complex<double> eval_monic(const Eigen::VectorXd& last_row, std::complex<double> z);

/// Invariant stable/unstable splitting of a hyperbolic matrix computed with
/// the scaled Newton iteration for the matrix sign function.  Robust at
/// defective eigenvalues, where eigenvector bases are not.
struct SpectralSplitting {
    Eigen::MatrixXd stable_basis;        // orthonormal columns spanning E^s
    Eigen::MatrixXd unstable_basis;      // orthonormal columns spanning E^u
    Eigen::MatrixXd stable_complement;   // orthonormal columns spanning (E^s)^perp
    int stable_dim = 0;
};

SpectralSplitting spectral_splitting(const Eigen::MatrixXd& A);

/// Smallest/largest singular value of a stack of row vectors.
struct RankCheck {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    bool full_rank(double rel_threshold = 1e-3) const {
        return sigma_min > rel_threshold * sigma_max;
    }
};

RankCheck rank_check(const Eigen::MatrixXd& rows);

} // namespace connorb
