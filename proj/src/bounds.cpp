#include "rr1/bounds.hpp"

#include "rr1/errors.hpp"
#include "rr1/util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rr1 {

double jordan_disk_radius(int n, double eps) {
    if (n < 2) throw InputError("jordan_disk_radius: n must be at least 2");
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("jordan_disk_radius: eps must lie in (0,1)");
    // f(r) = r^n / (1-r) - eps increases from -eps to +inf on (0,1).
    auto f = [&](double r) { return std::pow(r, n) / (1.0 - r) - eps; };
    double lo = 0.0, hi = 1.0 - 1e-15;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double jordan_ratio_bound(Complex z, int n) {
    if (n < 2) throw InputError("jordan_ratio_bound: n must be at least 2");
    double a = std::abs(z);
    if (a >= 1.0) throw DomainError("jordan_ratio_bound: requires |z| < 1");
    return std::pow(a, n) / (1.0 - a);
}

EigenvalueBoundsContext::EigenvalueBoundsContext(const SvdResult& A0, Complex lambda, int kmax,
                                                 double tol_rank)
    : lambda_(lambda), kmax_(kmax), svd_(A0) {
    if (kmax < 1) throw InputError("bounds: kmax must be at least 1");
    double scale = std::max(svd_.sigma(0), 1.0);
    if (svd_.sigma_min() > 1e-8 * scale)
        throw InputError("bounds: lambda is not an eigenvalue / no zero singular value "
                         "(sigma_n = " +
                         format_full(svd_.sigma_min()) + ")");
    if (svd_.sigma_second() <= tol_rank * svd_.sigma(0))
        throw RankDeficiencyError("bounds: more than one singular value below "
                                  "tol_rank * sigma_1");
    pinv_ = pinv_dense(svd_, tol_rank);

    const ComplexVector un = svd_.u_last();
    ComplexVector x = svd_.v_last();
    powers_.push_back(x);
    inner_.push_back(un.dot(x));
    for (int j = 1; j < kmax_; ++j) {
        x = pinv_ * x;
        // Guard against overflow of (A0^+)^j when sigma_{n-1} << 1.
        if (!x.allFinite() || x.norm() > 1e100) break;
        powers_.push_back(x);
        inner_.push_back(un.dot(x));
    }
}

EigenvalueBoundsContext::EigenvalueBoundsContext(const ComplexMatrix& A, Complex lambda,
                                                 int kmax, double tol_rank)
    : EigenvalueBoundsContext(
          [&] {
              if (A.rows() != A.cols()) throw InputError("bounds: matrix must be square");
              ComplexMatrix A0 = A;
              A0.diagonal().array() -= lambda;
              return svd(A0);
          }(),
          lambda, kmax, tol_rank) {}

Thm4Bounds EigenvalueBoundsContext::bounds(Complex z, int k) const {
    if (k < 1) throw InputError("bounds: k must be at least 1");
    const int n = svd_.rows();
    const double sigma2 = svd_.sigma_second();
    const double az = std::abs(z);
    const int kc = std::min<int>(k, static_cast<int>(inner_.size()));

    Thm4Bounds out;
    // Vector form: || sum_j z^j (u_n^H (A0^+)^{j-1} v_n) u_n + z^{k+1} (A0^+)^k v_n ||.
    Complex coef = 0.0;
    Complex zj = 1.0;
    for (int j = 1; j <= kc; ++j) {
        zj *= z;
        coef += zj * inner_[static_cast<size_t>(j - 1)];
    }
    ComplexVector tail = (kc < static_cast<int>(powers_.size()))
                             ? powers_[static_cast<size_t>(kc)]
                             : ComplexVector(pinv_ * powers_.back());
    ComplexVector w = coef * svd_.U.col(n - 1) + (zj * z) * tail;
    out.vec_bound = w.norm();

    // Scalar form: |z| (sum_j |z|^{j-1} |c_{j-1}| + |z|^k / sigma_{n-1}^k).
    double s = 0.0;
    double azj = 1.0;
    for (int j = 1; j <= kc; ++j) {
        s += azj * std::abs(inner_[static_cast<size_t>(j - 1)]);
        azj *= az;
    }
    out.scalar_bound = az * (s + std::pow(az / sigma2, kc));

    // Resolvent form, only under the sufficient spectral-radius guard.
    if (az < sigma2) {
        ComplexMatrix M = ComplexMatrix::Identity(n, n) - z * pinv_;
        ComplexVector x = M.partialPivLu().solve(svd_.v_last());
        out.inf_bound = az * std::abs(svd_.u_last().dot(x));
    }
    return out;
}

RegionFlags EigenvalueBoundsContext::flags(double eps, Complex z) const {
    RegionFlags out;
    const Complex w = z - lambda_;
    const double aw = std::abs(w);
    const double sigma2 = svd_.sigma_second();
    if (aw >= sigma2) return out; // outside every certificate's domain

    const double rhs = eps * (sigma2 - aw);

    // ineq1: minimize the truncated scalar bound over k = 1..kmax. Partial
    // sums grow while the tail term shrinks, so track the running minimum.
    double best = std::numeric_limits<double>::infinity();
    double s = 0.0, awj = 1.0;
    double ratio = aw / sigma2;
    double tail = 1.0;
    for (size_t j = 0; j < inner_.size(); ++j) {
        s += awj * std::abs(inner_[j]);
        awj *= aw;
        tail *= ratio;
        best = std::min(best, aw * (s + tail));
    }
    out.ineq1 = best <= rhs;

    const int n = svd_.rows();
    ComplexMatrix M = ComplexMatrix::Identity(n, n) - w * pinv_;
    ComplexVector x = M.partialPivLu().solve(svd_.v_last());
    double inf_bound = aw * std::abs(svd_.u_last().dot(x));
    out.ineq2 = inf_bound <= rhs;
    out.pseudo_ineq = inf_bound <= eps;
    return out;
}

Thm4Bounds thm4_bounds(const SvdResult& A0, Complex z, int k, double tol_rank) {
    EigenvalueBoundsContext ctx(A0, Complex(0.0), std::max(k, 1), tol_rank);
    return ctx.bounds(z, k);
}

RegionFlags region_memberships(const ComplexMatrix& A, Complex lambda, double eps, Complex z,
                               int kmax) {
    EigenvalueBoundsContext ctx(A, lambda, kmax);
    return ctx.flags(eps, z);
}

OrthogonalityProfile orthogonality_profile(const ComplexMatrix& A, Complex lambda, int jmax) {
    if (jmax < 0) throw InputError("orthogonality_profile: jmax must be nonnegative");
    EigenvalueBoundsContext ctx(A, lambda, std::max(jmax + 1, 2));
    const SvdResult& dec = ctx.decomposition();

    OrthogonalityProfile profile;
    profile.lambda = lambda;
    profile.sigma_second = dec.sigma_second();
    const ComplexVector un = dec.u_last();
    ComplexVector x = dec.v_last();
    for (int j = 0; j <= jmax; ++j) {
        if (j > 0) x = pinv_apply(dec, x, 1);
        double raw = std::abs(un.dot(x));
        profile.raw.push_back(raw);
        profile.normalized.push_back(raw / x.norm());
    }
    return profile;
}

std::vector<RelationDiskInfo> relation_disks(const ComplexMatrix& A, double r) {
    if (!(r > 1.0)) throw DomainError("relation_disks: requires r > 1");
    auto eigs = eigen_with_conditions(A);
    const int n = static_cast<int>(A.rows());

    // Simplicity check: pairwise distinct eigenvalues at working precision.
    double scale = std::max(A.norm(), 1.0);
    for (size_t i = 0; i < eigs.size(); ++i)
        for (size_t j = i + 1; j < eigs.size(); ++j)
            if (std::abs(eigs[i].lambda - eigs[j].lambda) <= 1e-8 * scale)
                throw DegeneracyError("relation_disks: eigenvalues " + std::to_string(i) +
                                      " and " + std::to_string(j) + " are not simple");

    std::vector<double> sigma2(eigs.size());
    for (size_t j = 0; j < eigs.size(); ++j) {
        ComplexMatrix A0 = A;
        A0.diagonal().array() -= eigs[j].lambda;
        RealVector sig = svd(A0).sigma;
        sigma2[j] = sig(n - 2);
    }
    double lo = *std::min_element(sigma2.begin(), sigma2.end());
    double hi = *std::max_element(sigma2.begin(), sigma2.end());
    double fwd = r / ((r - 1.0) * lo);
    double bwd = hi * (r + 1.0) / r;

    std::vector<RelationDiskInfo> out(eigs.size());
    for (size_t j = 0; j < eigs.size(); ++j) {
        out[j].lambda = eigs[j].lambda;
        out[j].disk = DiskRegion{eigs[j].lambda, sigma2[j] / r};
        out[j].eps_forward_factor = fwd;
        out[j].eps_backward_factor = bwd;
    }
    return out;
}

} // namespace rr1
