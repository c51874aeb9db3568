#pragma once

#include "rr1/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace rr1 {

/// Laurent polynomial b(t) = sum_{k=min_power}^{max_power} b_k t^k on the
/// unit circle, with finite support and at least one nonzero coefficient.
/// Generates the banded Toeplitz matrix carrying b_k on the k-th
/// superdiagonal (negative k: subdiagonals).
struct LaurentSymbol {
    int min_power = 0;
    std::vector<Complex> coeffs; // coeffs[i] = b_{min_power + i}

    int max_power() const { return min_power + static_cast<int>(coeffs.size()) - 1; }
    Complex coeff(int power) const {
        int i = power - min_power;
        return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(i)]
                                                               : Complex(0.0);
    }
    double max_abs_coeff() const;
    void validate() const; // throws InputError when all coefficients vanish
};

/// Parses the CLI symbol syntax: comma-separated "power:coeff" pairs where
/// coeff is a complex token ("re", "re+imj", ...). Example:
/// "-1:-1,0:-1,1:1,2:1,3:1".
LaurentSymbol parse_symbol(const std::string& text);

/// b(e^{i theta}).
Complex eval_symbol(const LaurentSymbol& b, double theta);

/// Signed number of times b(e^{i theta}) - z encircles the origin
/// counterclockwise. Uniform sampling starting at 256 points with doubling
/// refinement until every step turns by less than pi/2 (up to 2^16 points).
/// Throws OnCurveError when the curve passes within 1e-9 * max|b_k| of z.
int winding_number(const LaurentSymbol& b, Complex z);

/// Finite section T_n(b): entry (i,j) = b_{j-i}. n >= 2.
ComplexMatrix toeplitz_matrix(const LaurentSymbol& b, int n);

/// Record of the splitting experiment: three smallest singular values of
/// T_n(b) - zI for each n, the fitted exponential rate of the smallest one,
/// and the empirical floor under the first singular value that should stay
/// away from zero (sigma_{n-1}, or sigma_{n-2} when |winding| = 2).
struct SplittingReport {
    Complex z;
    int winding = 0;
    std::vector<int> sizes;
    std::vector<std::array<double, 3>> sing3; // {sigma_n, sigma_{n-1}, sigma_{n-2}} per n
    double decay_rate = 0.0;                  // least-squares slope of ln sigma_n over the upper half
    double floor = 0.0;
};

/// Runs the experiment for n = n_min..n_max (n_min >= 3). Per-n computations
/// are order-independent; the report lists sizes in increasing order.
SplittingReport splitting_experiment(const LaurentSymbol& b, Complex z, int n_min, int n_max);

namespace detail {
/// One sampling pass at m points; max_step receives the largest absolute
/// argument change between consecutive samples and max_step_theta the angle
/// where it occurred. Used by the doubling loop and by refinement-stability
/// tests.
double winding_sum_sampled(const LaurentSymbol& b, Complex z, int m, double& max_step,
                           double* max_step_theta = nullptr);
/// Least-squares slope of y against x; r2 (when non-null) receives the
/// coefficient of determination.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y,
                 double* r2 = nullptr);
} // namespace detail

} // namespace rr1
