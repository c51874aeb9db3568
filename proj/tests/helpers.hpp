#pragma once

#include "rr1/linalg.hpp"
#include "rr1/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace rr1::testing {

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline ComplexMatrix random_complex(int rows, int cols, std::mt19937_64& gen,
                                    double scale = 1.0) {
    std::normal_distribution<double> gauss;
    ComplexMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            M(i, j) = scale * Complex(gauss(gen), gauss(gen));
    return M;
}

/// Ginibre-style matrix normalized so ||A|| is O(1).
inline ComplexMatrix random_matrix(int n, std::mt19937_64& gen) {
    return random_complex(n, n, gen, 1.0 / std::sqrt(2.0 * n));
}

/// Haar-ish random unitary via QR with phase-fixed R diagonal.
inline ComplexMatrix random_unitary(int n, std::mt19937_64& gen) {
    ComplexMatrix G = random_complex(n, n, gen);
    Eigen::HouseholderQR<ComplexMatrix> qr(G);
    ComplexMatrix Q = qr.householderQ();
    ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        Complex d = R(j, j);
        double m = std::abs(d);
        if (m > 0) Q.col(j) *= d / m;
    }
    return Q;
}

/// U diag(sigma) V^H with random unitary factors and prescribed singular
/// values (descending order is the caller's responsibility).
inline ComplexMatrix matrix_with_singular_values(const std::vector<double>& sigma,
                                                 std::mt19937_64& gen) {
    int n = static_cast<int>(sigma.size());
    ComplexMatrix U = random_unitary(n, gen);
    ComplexMatrix V = random_unitary(n, gen);
    RealVector s(n);
    for (int i = 0; i < n; ++i) s(i) = sigma[static_cast<size_t>(i)];
    return U * s.asDiagonal() * V.adjoint();
}

/// Well-separated singular values in [hi, lo] with the last one zero.
inline ComplexMatrix planted_zero_matrix(int n, std::mt19937_64& gen, double hi = 3.0,
                                         double lo = 0.6) {
    std::vector<double> sigma(static_cast<size_t>(n));
    for (int i = 0; i + 1 < n; ++i)
        sigma[static_cast<size_t>(i)] = hi - (hi - lo) * i / std::max(1, n - 2);
    sigma[static_cast<size_t>(n - 1)] = 0.0;
    return matrix_with_singular_values(sigma, gen);
}

/// Diagonal-matrix oracle: the singular values of diag(d) - zI are the
/// sorted |d_i - z|, so the rank-one-ness ratio is the quotient of the two
/// smallest of those.
inline double diag_ratio_oracle(const std::vector<Complex>& diag, Complex z) {
    std::vector<double> dist;
    dist.reserve(diag.size());
    for (Complex d : diag) dist.push_back(std::abs(d - z));
    std::sort(dist.begin(), dist.end());
    if (dist[0] == 0.0) return 0.0;
    return dist[0] / dist[1];
}

inline double diag_sigma_min_oracle(const std::vector<Complex>& diag, Complex z) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex d : diag) best = std::min(best, std::abs(d - z));
    return best;
}

} // namespace rr1::testing
