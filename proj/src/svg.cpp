#include "rr1/svg.hpp"

#include "rr1/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace rr1 {

namespace {

struct Box {
    double re_lo = std::numeric_limits<double>::infinity();
    double re_hi = -std::numeric_limits<double>::infinity();
    double im_lo = std::numeric_limits<double>::infinity();
    double im_hi = -std::numeric_limits<double>::infinity();

    void add(double re, double im) {
        re_lo = std::min(re_lo, re);
        re_hi = std::max(re_hi, re);
        im_lo = std::min(im_lo, im);
        im_hi = std::max(im_hi, im);
    }
    bool empty() const { return !(re_lo <= re_hi); }
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

} // namespace

std::string render_svg(const std::vector<SvgContourLayer>& layers,
                       const std::vector<Complex>& eigenvalue_markers,
                       const std::vector<SvgDiskLayer>& disks) {
    bool any = !eigenvalue_markers.empty() || !disks.empty();
    for (const auto& l : layers) any = any || !l.contours.polylines.empty();
    if (!any) throw InputError("render_svg: nothing to draw");

    Box box;
    for (const auto& l : layers)
        for (const auto& line : l.contours.polylines)
            for (const auto& p : line) box.add(p[0], p[1]);
    for (Complex z : eigenvalue_markers) box.add(z.real(), z.imag());
    for (const auto& d : disks) {
        box.add(d.disk.center.real() - d.disk.radius, d.disk.center.imag() - d.disk.radius);
        box.add(d.disk.center.real() + d.disk.radius, d.disk.center.imag() + d.disk.radius);
    }
    if (box.empty()) box = Box{0, 1, 0, 1};
    double span_re = std::max(box.re_hi - box.re_lo, 1e-12);
    double span_im = std::max(box.im_hi - box.im_lo, 1e-12);

    const double width = 640.0;
    const double pad = 24.0;
    double scale = (width - 2 * pad) / span_re;
    double height = span_im * scale + 2 * pad;

    auto X = [&](double re) { return pad + (re - box.re_lo) * scale; };
    auto Y = [&](double im) { return height - (pad + (im - box.im_lo) * scale); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
           "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) +
           "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const auto& l : layers) {
        for (const auto& line : l.contours.polylines) {
            if (line.empty()) continue;
            std::string d = "M " + fmt(X(line[0][0])) + " " + fmt(Y(line[0][1]));
            for (size_t i = 1; i < line.size(); ++i)
                d += " L " + fmt(X(line[i][0])) + " " + fmt(Y(line[i][1]));
            svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + l.color +
                   "\" stroke-width=\"" + fmt(l.stroke_width) + "\"/>\n";
        }
    }

    for (const auto& d : disks) {
        svg += "<circle cx=\"" + fmt(X(d.disk.center.real())) + "\" cy=\"" +
               fmt(Y(d.disk.center.imag())) + "\" r=\"" + fmt(d.disk.radius * scale) +
               "\" fill=\"none\" stroke=\"" + d.color + "\" stroke-width=\"" +
               fmt(d.stroke_width) + "\"/>\n";
    }

    // Eigenvalues as red asterisks: three strokes through the point.
    const double arm = 5.0;
    for (Complex z : eigenvalue_markers) {
        double cx = X(z.real()), cy = Y(z.imag());
        for (int k = 0; k < 3; ++k) {
            double ang = std::numbers::pi * k / 3.0;
            double dx = arm * std::cos(ang), dy = arm * std::sin(ang);
            svg += "<line x1=\"" + fmt(cx - dx) + "\" y1=\"" + fmt(cy - dy) + "\" x2=\"" +
                   fmt(cx + dx) + "\" y2=\"" + fmt(cy + dy) +
                   "\" stroke=\"red\" stroke-width=\"1\"/>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace rr1
