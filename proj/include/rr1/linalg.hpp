#pragma once

#include "rr1/types.hpp"

#include <vector>

namespace rr1 {

/// Full singular value decomposition M = U * diag(sigma) * V^H with U, V
/// unitary and sigma nonincreasing. Singular vectors follow a fixed phase
/// convention: each v_j is rotated so its largest-magnitude component is real
/// positive, and u_j carries the same rotation.
struct SvdResult {
    ComplexMatrix U;
    RealVector sigma;
    ComplexMatrix V;

    int rows() const { return static_cast<int>(U.rows()); }
    int cols() const { return static_cast<int>(V.rows()); }

    double sigma_min() const { return sigma(sigma.size() - 1); }
    /// Second smallest singular value (sigma_{n-1} in 1-based terms).
    double sigma_second() const { return sigma(sigma.size() - 2); }

    ComplexVector u_last() const { return U.col(U.cols() - 1); }
    ComplexVector v_last() const { return V.col(V.cols() - 1); }
};

/// One eigenvalue with unit right/left eigenvectors and its condition number
/// 1/|y^H x|.
struct EigenInfo {
    Complex lambda;
    ComplexVector right; // x, unit norm
    ComplexVector left;  // y, unit norm
    double cond = 1.0;
};

/// Computes the full SVD of M. Deterministic for a fixed input.
/// Throws InputError on non-finite entries.
SvdResult svd(const ComplexMatrix& M);

/// Eigenvalues of A with unit right and left eigenvectors and condition
/// numbers. Left vectors come from the inverse of the right-eigenvector
/// matrix, which pairs them to eigenvalues by construction. Results are
/// sorted by (Re, Im) ascending.
/// Throws DegeneracyError when the eigenvector matrix is numerically
/// singular (defective or near-defective A).
std::vector<EigenInfo> eigen_with_conditions(const ComplexMatrix& A);

/// Default relative threshold below which a singular value counts as zero.
inline constexpr double kDefaultRankTol = 1e-10;

/// Applies (A0^+)^power to w, where A0^+ is the Moore-Penrose pseudoinverse
/// built from the leading n-1 singular triplets of A0 (the smallest singular
/// value is treated as the zero one). power == 0 returns w unchanged.
/// Throws RankDeficiencyError if sigma_{n-1} <= tol_rank * sigma_1, i.e. if
/// more than one singular value is numerically zero.
ComplexVector pinv_apply(const SvdResult& A0, const ComplexVector& w, int power,
                         double tol_rank = kDefaultRankTol);

/// Dense n x n pseudoinverse V_{n-1} Sigma_{n-1}^{-1} U_{n-1}^H. Same rank
/// requirements as pinv_apply.
ComplexMatrix pinv_dense(const SvdResult& A0, double tol_rank = kDefaultRankTol);

namespace detail {
/// Rotates each column of V so its largest-magnitude entry is real positive
/// and applies the same rotation to the matching column of U.
void normalize_svd_phases(ComplexMatrix& U, ComplexMatrix& V);
} // namespace detail

} // namespace rr1
