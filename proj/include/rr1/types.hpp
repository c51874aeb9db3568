#pragma once

#include <Eigen/Dense>
#include <complex>

namespace rr1 {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd; // dense, spectral ops require square
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Open disk { z : |z - center| < radius }.
struct DiskRegion {
    Complex center;
    double radius = 0.0;

    bool contains(Complex z) const { return std::abs(z - center) < radius; }
};

} // namespace rr1
