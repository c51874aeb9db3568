#include "rr1/svd_calculus.hpp"

#include "rr1/errors.hpp"
#include "rr1/util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rr1 {

namespace {

ComplexMatrix path_matrix(const ComplexMatrix& A0, double theta, double r) {
    if (A0.rows() != A0.cols()) throw InputError("svd path: matrix must be square");
    ComplexMatrix M = A0;
    M.diagonal().array() -= r * std::polar(1.0, theta);
    return M;
}

void require_simple_singular_values(const RealVector& sigma) {
    const int n = static_cast<int>(sigma.size());
    double scale = std::max(sigma(0), 1.0);
    for (int j = 0; j + 1 < n; ++j)
        if (sigma(j) - sigma(j + 1) < 1e-10 * scale)
            throw DegeneracyError("svd path: singular values " + std::to_string(j + 1) +
                                  " and " + std::to_string(j + 2) +
                                  " collide (gap below 1e-10 relative)");
}

// Decomposition of A0 - r e^{i theta} I with u_n phase-fixed whenever the
// smallest singular value is numerically zero.
SvdResult path_svd_fixed(const ComplexMatrix& A0, double theta, double r) {
    SvdResult dec = svd(path_matrix(A0, theta, r));
    const int n = static_cast<int>(dec.sigma.size());
    if (dec.sigma(n - 1) <= 1e-12 * std::max(dec.sigma(0), 1.0))
        dec.U.col(n - 1) = phase_fix(dec.U.col(n - 1), dec.V.col(n - 1), theta);
    return dec;
}

} // namespace

ComplexVector phase_fix(const ComplexVector& u_n, const ComplexVector& v_n, double theta) {
    Complex c = u_n.dot(v_n); // u_n^H v_n
    if (std::abs(c) == 0.0) return u_n;
    double phi = theta + std::arg(c) + std::numbers::pi;
    return std::polar(1.0, phi) * u_n;
}

RealVector singular_value_derivatives(const ComplexMatrix& A0, double theta, double r) {
    SvdResult dec = path_svd_fixed(A0, theta, r);
    require_simple_singular_values(dec.sigma);
    const int n = static_cast<int>(dec.sigma.size());
    const Complex phase = std::polar(1.0, theta);
    RealVector out(n);
    for (int j = 0; j < n; ++j)
        out(j) = -(phase * dec.U.col(j).dot(dec.V.col(j))).real();
    return out;
}

SvdPathDerivative svd_path_derivative(const ComplexMatrix& A0, double theta, double r) {
    SvdResult dec = path_svd_fixed(A0, theta, r);
    require_simple_singular_values(dec.sigma);
    const int n = static_cast<int>(dec.sigma.size());
    const Complex phase = std::polar(1.0, theta);
    const double ztol = 1e-12 * std::max(dec.sigma(0), 1.0);

    SvdPathDerivative out;
    out.point.theta = theta;
    out.point.r = r;
    out.point.Q = -phase * (dec.U.adjoint() * dec.V);
    const ComplexMatrix& Q = out.point.Q;

    ComplexMatrix Z = ComplexMatrix::Zero(n, n);
    ComplexMatrix W = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            // sigma_k z_jk + sigma_j conj(w_kj) = Q_jk
            // sigma_j z_jk + sigma_k conj(w_kj) = -conj(Q_kj)
            double sj = dec.sigma(j), sk = dec.sigma(k);
            double det = sk * sk - sj * sj;
            Complex rhs1 = Q(j, k);
            Complex rhs2 = -std::conj(Q(k, j));
            Complex zjk = (sk * rhs1 - sj * rhs2) / det;
            Complex wkj_bar = (sk * rhs2 - sj * rhs1) / det;
            Z(j, k) = zjk;
            Z(k, j) = -std::conj(zjk);
            W(k, j) = std::conj(wkj_bar);
            W(j, k) = -wkj_bar;
        }
        // Diagonal gauge: diag(Z) = diag(W^H). A zero singular value takes
        // z_jj = w_jj = 0; the phase fix made that consistent.
        if (dec.sigma(j) > ztol) {
            Complex uv = dec.U.col(j).dot(dec.V.col(j));
            Complex d = Complex(0.0, -1.0) * (phase * uv).imag() / (2.0 * dec.sigma(j));
            Z(j, j) = d;
            W(j, j) = -d;
        }
    }

    out.sigma_prime.resize(n);
    for (int j = 0; j < n; ++j)
        out.sigma_prime(j) = -(phase * dec.U.col(j).dot(dec.V.col(j))).real();
    out.U_prime = dec.U * Z;
    out.V_prime = dec.V * W;
    out.point.Z = std::move(Z);
    out.point.W = std::move(W);
    out.point.svd = std::move(dec);
    return out;
}

InnerProductDerivative inner_product_derivative_at_zero(const ComplexMatrix& A0, double theta) {
    SvdResult dec = svd(A0);
    const int n = static_cast<int>(dec.sigma.size());
    double scale = std::max(dec.sigma(0), 1.0);
    if (dec.sigma(n - 1) > 1e-8 * scale)
        throw InputError("inner_product_derivative: A0 has no zero singular value");
    // The zero singular value must be simple; the pseudoinverse (and hence
    // the formula) is insensitive to ties among the nonzero ones.
    if (dec.sigma(n - 2) <= kDefaultRankTol * dec.sigma(0))
        throw RankDeficiencyError("inner_product_derivative: more than one zero singular value");

    InnerProductDerivative out;
    out.u_n = phase_fix(dec.U.col(n - 1), dec.V.col(n - 1), theta);
    out.v_n = dec.V.col(n - 1);
    dec.U.col(n - 1) = out.u_n;

    const Complex phase = std::polar(1.0, theta);
    ComplexVector pv = pinv_apply(dec, out.v_n, 1);
    Complex half = phase * out.u_n.dot(pv);
    out.du_half = half;
    out.dv_half = half;
    out.total = 2.0 * half;
    return out;
}

namespace fd {

double default_step(const ComplexMatrix& A0) {
    return 1e-5 * std::max(1.0, A0.norm());
}

namespace {

// Rotates `col` so that base^H col is real positive.
ComplexVector align_to(const ComplexVector& base, const ComplexVector& col) {
    Complex overlap = base.dot(col);
    double mag = std::abs(overlap);
    if (mag == 0.0) return col;
    return (std::conj(overlap) / mag) * col;
}

} // namespace

RealVector sigma_derivative(const ComplexMatrix& A0, double theta, double r, double h) {
    RealVector plus = svd(path_matrix(A0, theta, r + h)).sigma;
    RealVector minus = svd(path_matrix(A0, theta, r - h)).sigma;
    return (plus - minus) / (2.0 * h);
}

VectorDerivatives vector_derivatives(const ComplexMatrix& A0, double theta, double r, double h) {
    SvdResult base = svd(path_matrix(A0, theta, r));
    SvdResult plus = svd(path_matrix(A0, theta, r + h));
    SvdResult minus = svd(path_matrix(A0, theta, r - h));
    const int n = static_cast<int>(base.sigma.size());
    VectorDerivatives out;
    out.dU.resize(n, n);
    out.dV.resize(n, n);
    for (int j = 0; j < n; ++j) {
        out.dU.col(j) = (align_to(base.U.col(j), plus.U.col(j)) -
                         align_to(base.U.col(j), minus.U.col(j))) /
                        (2.0 * h);
        out.dV.col(j) = (align_to(base.V.col(j), plus.V.col(j)) -
                         align_to(base.V.col(j), minus.V.col(j))) /
                        (2.0 * h);
    }
    return out;
}

Complex inner_product_derivative(const ComplexMatrix& A0, double theta, double h) {
    InnerProductDerivative base = inner_product_derivative_at_zero(A0, theta);
    const int n = static_cast<int>(base.u_n.size());
    auto sample = [&](double r) {
        SvdResult dec = svd(path_matrix(A0, theta, r));
        ComplexVector u = align_to(base.u_n, dec.U.col(n - 1));
        ComplexVector v = align_to(base.v_n, dec.V.col(n - 1));
        return u.dot(v);
    };
    return (sample(h) - sample(-h)) / (2.0 * h);
}

} // namespace fd

} // namespace rr1
