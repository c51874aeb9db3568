#pragma once

#include "rr1/linalg.hpp"
#include "rr1/types.hpp"

#include <optional>
#include <vector>

namespace rr1 {

/// Radius of the disk about the origin that the Jordan-block analysis
/// guarantees to lie in the rank-one-ness region at tolerance eps: the unique
/// root r in (0,1) of r^n / (1-r) = eps, found by bisection to 1e-12. Always
/// at least eps^{1/n} / 2.
double jordan_disk_radius(int n, double eps);

/// |z|^n / (1 - |z|): upper bound on sigma_n / sigma_{n-1} of J - zI for an
/// n x n Jordan block J. Requires |z| < 1.
double jordan_ratio_bound(Complex z, int n);

/// Upper bounds on sigma_n(A0 - zI) derived from the pseudoinverse expansion
/// around the zero singular value of A0. `inf_bound` (the k -> infinity
/// resolvent form) is emitted only when |z| < sigma_{n-1}, which guarantees
/// the spectral radius of z * A0^+ is below one.
struct Thm4Bounds {
    double vec_bound = 0.0;
    double scalar_bound = 0.0;
    std::optional<double> inf_bound;
};

Thm4Bounds thm4_bounds(const SvdResult& A0, Complex z, int k,
                       double tol_rank = kDefaultRankTol);

/// Near-orthogonality profile of u_n against powers of the pseudoinverse
/// applied to v_n, at A0 = A - lambda I for a simple eigenvalue lambda.
/// raw[j] = |u_n^H (A0^+)^j v_n|, normalized[j] = raw[j] / ||(A0^+)^j v_n||.
struct OrthogonalityProfile {
    Complex lambda;
    double sigma_second = 0.0;
    std::vector<double> raw;
    std::vector<double> normalized;
};

OrthogonalityProfile orthogonality_profile(const ComplexMatrix& A, Complex lambda, int jmax);

/// Membership certificates for one point z relative to the eigenvalue lambda:
///   ineq1  - truncated scalar bound (minimized over k = 1..kmax) stays under
///            eps * (sigma_{n-1} - |z - lambda|); implies z in S_eps(A).
///   ineq2  - resolvent-form bound under the same right-hand side; implies
///            z in S_eps(A).
///   pseudo - resolvent-form bound under eps; implies z in the
///            eps-pseudospectrum.
struct RegionFlags {
    bool ineq1 = false;
    bool ineq2 = false;
    bool pseudo_ineq = false;
};

RegionFlags region_memberships(const ComplexMatrix& A, Complex lambda, double eps, Complex z,
                               int kmax = 100);

/// Caches the SVD of A - lambda I and the inner-product sequence so that
/// sweeps over many z reuse them. region_memberships and thm4_bounds are
/// one-shot wrappers around this.
class EigenvalueBoundsContext {
public:
    EigenvalueBoundsContext(const ComplexMatrix& A, Complex lambda, int kmax = 100,
                            double tol_rank = kDefaultRankTol);
    /// Builds directly on a precomputed decomposition of A - lambda I.
    EigenvalueBoundsContext(const SvdResult& A0, Complex lambda, int kmax = 100,
                            double tol_rank = kDefaultRankTol);

    Thm4Bounds bounds(Complex z, int k) const;
    RegionFlags flags(double eps, Complex z) const;

    Complex lambda() const { return lambda_; }
    double sigma_second() const { return svd_.sigma_second(); }
    const SvdResult& decomposition() const { return svd_; }

private:
    Complex lambda_;
    int kmax_;
    SvdResult svd_;
    ComplexMatrix pinv_;                 // dense A0^+
    std::vector<Complex> inner_;         // u_n^H (A0^+)^j v_n, j = 0..kmax-1
    std::vector<ComplexVector> powers_;  // (A0^+)^j v_n, j = 0..kmax
};

/// Per-eigenvalue disk D(lambda_j, sigma_{n-1}(A - lambda_j I) / r) together
/// with the global scale factors that translate between pseudospectrum and
/// rank-one-ness tolerances inside the union of the disks.
struct RelationDiskInfo {
    Complex lambda;
    DiskRegion disk;
    double eps_forward_factor = 0.0;  // r / ((r-1) * min_j sigma_{n-1,j})
    double eps_backward_factor = 0.0; // max_j sigma_{n-1,j} * (r+1) / r
};

/// Requires r > 1 and all eigenvalues simple.
std::vector<RelationDiskInfo> relation_disks(const ComplexMatrix& A, double r);

} // namespace rr1
