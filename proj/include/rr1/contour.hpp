#pragma once

#include "rr1/field.hpp"

#include <array>
#include <vector>

namespace rr1 {

/// Iso-contour of a ScalarField at one level. Closed curves repeat their
/// first vertex at the end; open curves terminate on the grid boundary.
struct ContourSet {
    double level = 0.0;
    std::vector<std::vector<std::array<double, 2>>> polylines; // (re, im) vertices
};

/// Marching-squares contour extraction with linear interpolation along cell
/// edges. The two ambiguous saddle configurations are resolved by the sign of
/// the cell-center average. A level at or outside the range of the field
/// values yields an empty ContourSet.
ContourSet extract_contours(const ScalarField& field, double level);

} // namespace rr1
