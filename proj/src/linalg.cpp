#include "rr1/linalg.hpp"

#include "rr1/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace rr1 {

namespace detail {

void normalize_svd_phases(ComplexMatrix& U, ComplexMatrix& V) {
    for (Eigen::Index j = 0; j < V.cols(); ++j) {
        Eigen::Index p = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < V.rows(); ++i) {
            double m = std::norm(V(i, j));
            if (m > best) {
                best = m;
                p = i;
            }
        }
        Complex pivot = V(p, j);
        double mag = std::abs(pivot);
        if (mag == 0.0) continue;
        Complex rot = std::conj(pivot) / mag;
        V.col(j) *= rot;
        if (j < U.cols()) U.col(j) *= rot;
    }
}

} // namespace detail

SvdResult svd(const ComplexMatrix& M) {
    if (!M.allFinite()) throw InputError("svd: matrix has non-finite entries");
    Eigen::BDCSVD<ComplexMatrix> dec(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out{dec.matrixU(), dec.singularValues(), dec.matrixV()};
    detail::normalize_svd_phases(out.U, out.V);
    return out;
}

std::vector<EigenInfo> eigen_with_conditions(const ComplexMatrix& A) {
    if (A.rows() != A.cols()) throw InputError("eigen: matrix must be square");
    if (!A.allFinite()) throw InputError("eigen: matrix has non-finite entries");
    const int n = static_cast<int>(A.rows());
    if (n < 2) throw InputError("eigen: size must be at least 2");

    Eigen::ComplexEigenSolver<ComplexMatrix> solver(A, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw DegeneracyError("eigen: eigensolver did not converge");

    const ComplexMatrix& X = solver.eigenvectors(); // unit columns
    Eigen::JacobiSVD<ComplexMatrix> xsvd(X);
    double smin = xsvd.singularValues()(n - 1);
    double smax = xsvd.singularValues()(0);
    // 1/eps guard on the eigenvector matrix condition number.
    if (smin <= smax * std::numeric_limits<double>::epsilon())
        throw DegeneracyError("eigen: eigenvector matrix numerically singular "
                              "(defective or near-defective matrix)");

    ComplexMatrix Xinv = X.partialPivLu().solve(ComplexMatrix::Identity(n, n));

    std::vector<EigenInfo> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        EigenInfo& e = out[static_cast<size_t>(i)];
        e.lambda = solver.eigenvalues()(i);
        e.right = X.col(i).normalized();
        ComplexVector y = Xinv.row(i).adjoint(); // y^H = row i of X^{-1}
        e.left = y.normalized();
        double overlap = std::abs(e.left.dot(e.right)); // |y^H x|
        e.cond = 1.0 / overlap;
    }
    std::sort(out.begin(), out.end(), [](const EigenInfo& a, const EigenInfo& b) {
        if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
        return a.lambda.imag() < b.lambda.imag();
    });
    return out;
}

namespace {

void require_rank_n_minus_1(const SvdResult& A0, double tol_rank) {
    const int n = static_cast<int>(A0.sigma.size());
    if (n < 2) throw InputError("pinv: need at least a 2x2 system");
    if (A0.sigma(n - 2) <= tol_rank * A0.sigma(0))
        throw RankDeficiencyError("pinv: more than one singular value below "
                                  "tol_rank * sigma_1");
}

} // namespace

ComplexVector pinv_apply(const SvdResult& A0, const ComplexVector& w, int power,
                         double tol_rank) {
    require_rank_n_minus_1(A0, tol_rank);
    if (power < 0) throw InputError("pinv_apply: power must be nonnegative");
    const int n = static_cast<int>(A0.sigma.size());
    ComplexVector x = w;
    for (int p = 0; p < power; ++p) {
        ComplexVector coeffs = A0.U.leftCols(n - 1).adjoint() * x;
        coeffs.array() /= A0.sigma.head(n - 1).array();
        x = A0.V.leftCols(n - 1) * coeffs;
    }
    return x;
}

ComplexMatrix pinv_dense(const SvdResult& A0, double tol_rank) {
    require_rank_n_minus_1(A0, tol_rank);
    const int n = static_cast<int>(A0.sigma.size());
    return A0.V.leftCols(n - 1) *
           A0.sigma.head(n - 1).cwiseInverse().asDiagonal() *
           A0.U.leftCols(n - 1).adjoint();
}

} // namespace rr1
