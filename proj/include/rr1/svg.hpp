#pragma once

#include "rr1/contour.hpp"
#include "rr1/types.hpp"

#include <string>
#include <vector>

namespace rr1 {

/// One contour family with its stroke style.
struct SvgContourLayer {
    ContourSet contours;
    std::string color = "black";
    double stroke_width = 1.2;
};

/// One stroked circle.
struct SvgDiskLayer {
    DiskRegion disk;
    std::string color = "blue";
    double stroke_width = 1.2;
};

/// Renders contour families, eigenvalue markers (red asterisks) and disk
/// outlines into a standalone SVG 1.1 document. Output is deterministic for
/// identical input. At least one of the three inputs must be nonempty.
std::string render_svg(const std::vector<SvgContourLayer>& layers,
                       const std::vector<Complex>& eigenvalue_markers,
                       const std::vector<SvgDiskLayer>& disks);

} // namespace rr1
