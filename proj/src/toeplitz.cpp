#include "rr1/toeplitz.hpp"

#include "rr1/errors.hpp"
#include "rr1/linalg.hpp"
#include "rr1/util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rr1 {

double LaurentSymbol::max_abs_coeff() const {
    double m = 0.0;
    for (Complex c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

void LaurentSymbol::validate() const {
    if (coeffs.empty() || max_abs_coeff() == 0.0)
        throw InputError("symbol: needs at least one nonzero coefficient");
}

LaurentSymbol parse_symbol(const std::string& text) {
    std::vector<std::pair<int, Complex>> terms;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string pair = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        size_t colon = pair.find(':');
        if (colon == std::string::npos)
            throw ParseError("symbol term '" + pair + "' is not power:coeff", 0, 0);
        int power = 0;
        try {
            size_t used = 0;
            power = std::stoi(pair.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("symbol power '" + pair.substr(0, colon) + "' is not an integer",
                             0, 0);
        }
        terms.emplace_back(power, parse_complex(pair.substr(colon + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (terms.empty()) throw ParseError("empty symbol", 0, 0);
    int lo = terms[0].first, hi = terms[0].first;
    for (auto& [p, c] : terms) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    LaurentSymbol b;
    b.min_power = lo;
    b.coeffs.assign(static_cast<size_t>(hi - lo + 1), Complex(0.0));
    for (auto& [p, c] : terms) b.coeffs[static_cast<size_t>(p - lo)] += c;
    b.validate();
    return b;
}

Complex eval_symbol(const LaurentSymbol& b, double theta) {
    Complex acc = 0.0;
    for (int i = 0; i < static_cast<int>(b.coeffs.size()); ++i) {
        int power = b.min_power + i;
        acc += b.coeffs[static_cast<size_t>(i)] * std::polar(1.0, power * theta);
    }
    return acc;
}

namespace detail {

double winding_sum_sampled(const LaurentSymbol& b, Complex z, int m, double& max_step,
                           double* max_step_theta) {
    double dist_tol = 1e-9 * b.max_abs_coeff();
    std::vector<Complex> w(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        double theta = 2.0 * std::numbers::pi * k / m;
        Complex value = eval_symbol(b, theta) - z;
        if (std::abs(value) <= dist_tol)
            throw OnCurveError("winding: symbol curve passes through the query point at theta = " +
                                   format_full(theta),
                               theta);
        w[static_cast<size_t>(k)] = value;
    }
    double total = 0.0;
    max_step = 0.0;
    if (max_step_theta) *max_step_theta = 0.0;
    for (int k = 0; k < m; ++k) {
        double step = std::arg(w[static_cast<size_t>((k + 1) % m)] / w[static_cast<size_t>(k)]);
        if (std::abs(step) > max_step) {
            max_step = std::abs(step);
            if (max_step_theta) *max_step_theta = 2.0 * std::numbers::pi * k / m;
        }
        total += step;
    }
    return total;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y, double* r2) {
    const size_t m = x.size();
    double sx = 0, sy = 0;
    for (size_t i = 0; i < m; ++i) {
        sx += x[i];
        sy += y[i];
    }
    double mx = sx / static_cast<double>(m), my = sy / static_cast<double>(m);
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    double slope = sxy / sxx;
    if (r2) *r2 = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
    return slope;
}

} // namespace detail

int winding_number(const LaurentSymbol& b, Complex z) {
    b.validate();
    constexpr int kStart = 256;
    constexpr int kLimit = 1 << 16;
    double worst_theta = 0.0;
    for (int m = kStart; m <= kLimit; m *= 2) {
        double max_step = 0.0;
        double total = detail::winding_sum_sampled(b, z, m, max_step, &worst_theta);
        if (max_step <= std::numbers::pi / 2) {
            double turns = total / (2.0 * std::numbers::pi);
            return static_cast<int>(std::lround(turns));
        }
    }
    throw OnCurveError(
        "winding: no convergence at 2^16 samples; curve passes too close to the query point "
        "near theta = " +
            format_full(worst_theta),
        worst_theta);
}

ComplexMatrix toeplitz_matrix(const LaurentSymbol& b, int n) {
    b.validate();
    if (n < 2) throw InputError("toeplitz_matrix: size must be at least 2");
    ComplexMatrix A = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i + b.min_power); j <= std::min(n - 1, i + b.max_power()); ++j)
            A(i, j) = b.coeff(j - i);
    return A;
}

SplittingReport splitting_experiment(const LaurentSymbol& b, Complex z, int n_min, int n_max) {
    b.validate();
    if (n_min < 3) throw InputError("splitting_experiment: n_min must be at least 3");
    if (n_max < n_min) throw InputError("splitting_experiment: n_max < n_min");

    SplittingReport report;
    report.z = z;
    report.winding = winding_number(b, z);

    const int count = n_max - n_min + 1;
    report.sizes.resize(static_cast<size_t>(count));
    report.sing3.resize(static_cast<size_t>(count));
    parallel_for(count, [&](int idx) {
        int n = n_min + idx;
        ComplexMatrix M = toeplitz_matrix(b, n);
        M.diagonal().array() -= z;
        RealVector sigma = svd(M).sigma;
        report.sizes[static_cast<size_t>(idx)] = n;
        report.sing3[static_cast<size_t>(idx)] = {sigma(n - 1), sigma(n - 2), sigma(n - 3)};
    });

    // Fit the decay of sigma_n over the upper half of the size range, past
    // the pre-asymptotic regime.
    std::vector<double> xs, ys;
    for (int idx = count / 2; idx < count; ++idx) {
        double s = report.sing3[static_cast<size_t>(idx)][0];
        xs.push_back(static_cast<double>(report.sizes[static_cast<size_t>(idx)]));
        ys.push_back(std::log(std::max(s, 1e-300)));
    }
    report.decay_rate = (xs.size() >= 2) ? detail::fit_slope(xs, ys) : 0.0;

    int floor_index = (std::abs(report.winding) == 2) ? 2 : 1;
    double floor = std::numeric_limits<double>::infinity();
    for (const auto& s : report.sing3)
        floor = std::min(floor, s[static_cast<size_t>(floor_index)]);
    report.floor = floor;
    return report;
}

} // namespace rr1
