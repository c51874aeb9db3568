#include "rr1/contour.hpp"

#include "rr1/field.hpp"
#include "rr1/gallery.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

using namespace rr1;

namespace {

ScalarField analytic_field(const GridSpec& g, double (*f)(double, double)) {
    ScalarField field;
    field.grid = g;
    field.which = FieldKind::inv_norm;
    field.values.assign(static_cast<size_t>(g.ny),
                        std::vector<double>(static_cast<size_t>(g.nx), 0.0));
    for (int i = 0; i < g.ny; ++i)
        for (int j = 0; j < g.nx; ++j)
            field.values[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                f(g.re_at(j), g.im_at(i));
    return field;
}

// Single-cell field with prescribed corner values; the cell spans [0,1]^2.
// Corners: a = (0,0), b = (1,0), c = (1,1), d = (0,1) in (re, im).
ScalarField one_cell(double a, double b, double c, double d) {
    ScalarField field;
    field.grid = GridSpec{0.0, 1.0, 0.0, 1.0, 2, 2};
    field.which = FieldKind::inv_norm;
    field.values = {{a, b}, {d, c}};
    return field;
}

double cross2(const std::array<double, 2>& o, const std::array<double, 2>& p,
              const std::array<double, 2>& q) {
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
}

bool segments_cross(const std::array<double, 2>& p1, const std::array<double, 2>& p2,
                    const std::array<double, 2>& q1, const std::array<double, 2>& q2) {
    double d1 = cross2(p1, p2, q1), d2 = cross2(p1, p2, q2);
    double d3 = cross2(q1, q2, p1), d4 = cross2(q1, q2, p2);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

} // namespace

TEST_SUITE_BEGIN("contour");

TEST_CASE("unit circle contour of |z|") {
    GridSpec g{-1.5, 1.5, -1.5, 1.5, 121, 121};
    ScalarField f = analytic_field(g, [](double x, double y) { return std::hypot(x, y); });
    ContourSet c = extract_contours(f, 1.0);
    REQUIRE(c.polylines.size() == 1);
    const auto& line = c.polylines.front();
    CHECK(line.front() == line.back()); // closed curve, explicitly closed
    double cell = std::hypot(3.0 / 120.0, 3.0 / 120.0);
    for (const auto& p : line) {
        CHECK(std::abs(std::hypot(p[0], p[1]) - 1.0) <= 2.0 * cell);
        CHECK(p[0] >= g.re_min);
        CHECK(p[0] <= g.re_max);
        CHECK(p[1] >= g.im_min);
        CHECK(p[1] <= g.im_max);
    }
    for (size_t i = 0; i + 1 < line.size(); ++i) {
        double step = std::hypot(line[i + 1][0] - line[i][0], line[i + 1][1] - line[i][1]);
        CHECK(step <= cell);
    }
}

TEST_CASE("open contour reaches the grid boundary") {
    GridSpec g{0.0, 1.0, 0.0, 1.0, 11, 11};
    ScalarField f = analytic_field(g, [](double x, double) { return x; });
    ContourSet c = extract_contours(f, 0.55);
    REQUIRE(c.polylines.size() == 1);
    const auto& line = c.polylines.front();
    CHECK(line.front() != line.back());
    for (const auto& p : line) CHECK(p[0] == doctest::Approx(0.55).epsilon(1e-12));
}

TEST_CASE("level outside the value range yields an empty set") {
    GridSpec g{0.0, 1.0, 0.0, 1.0, 5, 5};
    ScalarField f = analytic_field(g, [](double x, double y) { return x + y; });
    CHECK(extract_contours(f, -1.0).polylines.empty());
    CHECK(extract_contours(f, 99.0).polylines.empty());
}

TEST_CASE("all 16 single-cell configurations") {
    const double level = 0.5;
    const double lo = 0.0, hi = 1.0;
    for (int mask = 0; mask < 16; ++mask) {
        double a = (mask & 1) ? lo : hi;
        double b = (mask & 2) ? lo : hi;
        double c = (mask & 4) ? lo : hi;
        double d = (mask & 8) ? lo : hi;
        ContourSet set = extract_contours(one_cell(a, b, c, d), level);
        size_t expect = (mask == 0 || mask == 15) ? 0 : (mask == 5 || mask == 10) ? 2 : 1;
        CAPTURE(mask);
        CHECK(set.polylines.size() == expect);
        for (const auto& line : set.polylines) CHECK(line.size() == 2);
    }
}

TEST_CASE("saddle cells resolve to two disjoint segments under either center sign") {
    const double level = 0.5;
    // mask 5 (a, c below); center average steered below / above the level.
    for (double above : {0.9, 2.5}) {
        ContourSet set = extract_contours(one_cell(0.0, above, 0.0, above), level);
        REQUIRE(set.polylines.size() == 2);
        const auto& s1 = set.polylines[0];
        const auto& s2 = set.polylines[1];
        CHECK_FALSE(segments_cross(s1.front(), s1.back(), s2.front(), s2.back()));
    }
    // mask 10 (b, d below).
    for (double above : {0.9, 2.5}) {
        ContourSet set = extract_contours(one_cell(above, 0.0, above, 0.0), level);
        REQUIRE(set.polylines.size() == 2);
        const auto& s1 = set.polylines[0];
        const auto& s2 = set.polylines[1];
        CHECK_FALSE(segments_cross(s1.front(), s1.back(), s2.front(), s2.back()));
    }
}

TEST_CASE("saddle resolution respects the center average") {
    const double level = 0.5;
    auto endpoint_edges = [](const std::vector<std::array<double, 2>>& seg) {
        // Classifies the two endpoints by the cell edge they sit on:
        // 'T' im=0, 'B' im=1, 'L' re=0, 'R' re=1 (interior crossings only).
        std::string edges;
        for (const auto& p : {seg.front(), seg.back()}) {
            if (p[1] == 0.0) edges += 'T';
            else if (p[1] == 1.0) edges += 'B';
            else if (p[0] == 0.0) edges += 'L';
            else edges += 'R';
        }
        std::sort(edges.begin(), edges.end());
        return edges;
    };

    // a, c below with center below: band topology {T-R, L-B}.
    ContourSet connected = extract_contours(one_cell(0.0, 0.9, 0.0, 0.9), level);
    REQUIRE(connected.polylines.size() == 2);
    std::vector<std::string> got{endpoint_edges(connected.polylines[0]),
                                 endpoint_edges(connected.polylines[1])};
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"BL", "RT"});

    // a, c below with center above: corner-hugging topology {T-L, R-B}.
    ContourSet split = extract_contours(one_cell(0.0, 2.5, 0.0, 2.5), level);
    REQUIRE(split.polylines.size() == 2);
    got = {endpoint_edges(split.polylines[0]), endpoint_edges(split.polylines[1])};
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"BR", "LT"});
}

TEST_CASE("Jordan block ratio contour is a single near-circle of the reported radius") {
    GridSpec g{-0.7, 0.7, -0.7, 0.7, 150, 150};
    ScalarField f = evaluate_field(jordan(10, 0.0), g, FieldKind::ratio);
    ContourSet c = extract_contours(f, 1e-3);
    REQUIRE(c.polylines.size() == 1);
    CHECK(c.polylines.front().front() == c.polylines.front().back());
    double sum = 0.0;
    size_t count = 0;
    for (const auto& p : c.polylines.front()) {
        sum += std::hypot(p[0], p[1]);
        ++count;
    }
    double mean_radius = sum / static_cast<double>(count);
    CHECK(mean_radius == doctest::Approx(0.486).epsilon(0.03));
}

TEST_SUITE_END();
