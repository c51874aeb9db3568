#pragma once

#include "rr1/linalg.hpp"
#include "rr1/types.hpp"

namespace rr1 {

/// One point of the path A(r) = A0 - r e^{i theta} I together with the
/// generators of the singular-vector derivatives: Z = U^H U', W = V^H V'
/// (both skew-Hermitian) and Q = -e^{i theta} U^H V.
struct PathPoint {
    double theta = 0.0;
    double r = 0.0;
    SvdResult svd;
    ComplexMatrix Q;
    ComplexMatrix Z;
    ComplexMatrix W;
};

/// Full directional derivative of the SVD along the path.
struct SvdPathDerivative {
    PathPoint point;
    RealVector sigma_prime; // -Re(e^{i theta} diag(U^H V))
    ComplexMatrix U_prime;  // U Z
    ComplexMatrix V_prime;  // V W
};

/// Derivatives sigma_j'(r) = -Re(e^{i theta} u_j^H v_j) of all singular
/// values of A0 - r e^{i theta} I. When the smallest singular value vanishes
/// the left vector is phase-fixed first so the derivative is the nonnegative
/// branch. Throws DegeneracyError when two singular values collide (relative
/// gap below 1e-10).
RealVector singular_value_derivatives(const ComplexMatrix& A0, double theta, double r);

/// Rotates u_n by e^{i phi}, phi = theta + arg(u_n^H v_n) + pi, so that
/// -Re(e^{i theta} u_n^H v_n) becomes |u_n^H v_n| >= 0. If u_n^H v_n = 0 the
/// input is returned unchanged.
ComplexVector phase_fix(const ComplexVector& u_n, const ComplexVector& v_n, double theta);

/// Z/W generators and U', V' along the path, under the diagonal gauge
/// diag(Z) = diag(W^H); a vanishing singular value gets z_jj = w_jj = 0
/// after the phase fix. Throws DegeneracyError on colliding singular values.
SvdPathDerivative svd_path_derivative(const ComplexMatrix& A0, double theta, double r);

/// d/dr (u_n(r)^H v_n(r)) at r = 0 via the pseudoinverse: the total is
/// 2 e^{i theta} u_n^H A0^+ v_n and each half (the u_n' and v_n' shares)
/// equals e^{i theta} u_n^H A0^+ v_n. Requires exactly one (simple) zero
/// singular value. The phase-fixed u_n and the matching v_n are returned so
/// finite-difference checks can share the gauge.
struct InnerProductDerivative {
    Complex total;
    Complex du_half; // (u_n'(0))^H v_n(0)
    Complex dv_half; // u_n(0)^H v_n'(0)
    ComplexVector u_n; // phase-fixed
    ComplexVector v_n;
};

InnerProductDerivative inner_product_derivative_at_zero(const ComplexMatrix& A0, double theta);

/// Central finite differences along the same path, for derivative checks.
/// These share only the SVD kernel with the analytic formulas above.
namespace fd {

/// Step used by the derivative checks.
double default_step(const ComplexMatrix& A0);

/// (sigma(r+h) - sigma(r-h)) / 2h.
RealVector sigma_derivative(const ComplexMatrix& A0, double theta, double r, double h);

/// Phase-aligned finite differences of the singular vector matrices. Each
/// column at r +- h is rotated so its inner product with the base column at
/// r is real positive; the result estimates U' and V' with diag(Z) and
/// diag(W) gauged to zero.
struct VectorDerivatives {
    ComplexMatrix dU;
    ComplexMatrix dV;
};
VectorDerivatives vector_derivatives(const ComplexMatrix& A0, double theta, double r, double h);

/// Finite-difference estimate of d/dr (u_n^H v_n) at r = 0 around the
/// phase-fixed base returned by inner_product_derivative_at_zero.
Complex inner_product_derivative(const ComplexMatrix& A0, double theta, double h);

} // namespace fd

} // namespace rr1
