#include "rr1/contour.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

namespace rr1 {

namespace {

// Edge keys: a horizontal edge joins node (i,j) to (i,j+1), a vertical edge
// joins (i,j) to (i+1,j). Both are identified by the lower-left node index.
std::int64_t h_edge(int i, int j, int nx) { return (static_cast<std::int64_t>(i) * nx + j) * 2; }
std::int64_t v_edge(int i, int j, int nx) { return (static_cast<std::int64_t>(i) * nx + j) * 2 + 1; }

struct Segment {
    std::int64_t e1, e2;
};

} // namespace

ContourSet extract_contours(const ScalarField& field, double level) {
    ContourSet out;
    out.level = level;
    const GridSpec& g = field.grid;
    const auto& v = field.values;

    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -vmin;
    for (const auto& row : v)
        for (double x : row) {
            vmin = std::min(vmin, x);
            vmax = std::max(vmax, x);
        }
    if (!(level > vmin && level < vmax)) return out;

    auto below = [&](int i, int j) { return v[static_cast<size_t>(i)][static_cast<size_t>(j)] < level; };

    // Crossing point on an edge, interpolated between its node values.
    std::map<std::int64_t, std::array<double, 2>> points;
    auto cross_point = [&](std::int64_t id) -> std::array<double, 2> {
        auto it = points.find(id);
        if (it != points.end()) return it->second;
        int flat = static_cast<int>(id / 2);
        int i = flat / g.nx, j = flat % g.nx;
        double v0 = v[static_cast<size_t>(i)][static_cast<size_t>(j)];
        double v1, re, im;
        if (id % 2 == 0) { // horizontal: (i,j)-(i,j+1)
            v1 = v[static_cast<size_t>(i)][static_cast<size_t>(j + 1)];
            double t = (level - v0) / (v1 - v0);
            re = g.re_at(j) + t * (g.re_at(j + 1) - g.re_at(j));
            im = g.im_at(i);
        } else { // vertical: (i,j)-(i+1,j)
            v1 = v[static_cast<size_t>(i + 1)][static_cast<size_t>(j)];
            double t = (level - v0) / (v1 - v0);
            re = g.re_at(j);
            im = g.im_at(i) + t * (g.im_at(i + 1) - g.im_at(i));
        }
        auto p = std::array<double, 2>{re, im};
        points.emplace(id, p);
        return p;
    };

    std::vector<Segment> segments;
    for (int i = 0; i + 1 < g.ny; ++i) {
        for (int j = 0; j + 1 < g.nx; ++j) {
            int mask = (below(i, j) ? 1 : 0) | (below(i, j + 1) ? 2 : 0) |
                       (below(i + 1, j + 1) ? 4 : 0) | (below(i + 1, j) ? 8 : 0);
            if (mask == 0 || mask == 15) continue;
            std::int64_t T = h_edge(i, j, g.nx), B = h_edge(i + 1, j, g.nx);
            std::int64_t L = v_edge(i, j, g.nx), R = v_edge(i, j + 1, g.nx);
            auto add = [&](std::int64_t a, std::int64_t b) { segments.push_back({a, b}); };
            switch (mask) {
            case 1: case 14: add(T, L); break;
            case 2: case 13: add(T, R); break;
            case 3: case 12: add(L, R); break;
            case 4: case 11: add(R, B); break;
            case 6: case 9: add(T, B); break;
            case 7: case 8: add(L, B); break;
            case 5: case 10: {
                double center = 0.25 * (v[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                                        v[static_cast<size_t>(i)][static_cast<size_t>(j + 1)] +
                                        v[static_cast<size_t>(i + 1)][static_cast<size_t>(j)] +
                                        v[static_cast<size_t>(i + 1)][static_cast<size_t>(j + 1)]);
                // The below-region joins through the center when the center
                // average is below the level. For mask 5 the below corners
                // sit on the main diagonal, for mask 10 on the antidiagonal.
                bool connected = center < level;
                if ((mask == 5) == connected) {
                    add(T, R);
                    add(L, B);
                } else {
                    add(T, L);
                    add(R, B);
                }
                break;
            }
            default: break;
            }
        }
    }

    // Stitch segments into polylines. Each edge is shared by at most two
    // cells, so vertex degree is at most 2: chains and simple loops only.
    std::map<std::int64_t, std::vector<int>> adjacency;
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        adjacency[segments[static_cast<size_t>(s)].e1].push_back(s);
        adjacency[segments[static_cast<size_t>(s)].e2].push_back(s);
    }

    std::vector<char> used(segments.size(), 0);
    auto walk = [&](std::int64_t start_edge, int start_seg) {
        std::vector<std::array<double, 2>> line;
        line.push_back(cross_point(start_edge));
        std::int64_t at = start_edge;
        int seg = start_seg;
        while (true) {
            used[static_cast<size_t>(seg)] = 1;
            const Segment& s = segments[static_cast<size_t>(seg)];
            at = (s.e1 == at) ? s.e2 : s.e1;
            line.push_back(cross_point(at));
            int next = -1;
            for (int cand : adjacency[at])
                if (!used[static_cast<size_t>(cand)]) {
                    next = cand;
                    break;
                }
            if (next < 0) break;
            seg = next;
        }
        return line;
    };

    // Open chains first, starting from degree-1 edges in key order.
    for (const auto& [edge, segs] : adjacency) {
        if (segs.size() != 1) continue;
        int s = segs.front();
        if (used[static_cast<size_t>(s)]) continue;
        out.polylines.push_back(walk(edge, s));
    }
    // Remaining segments form closed loops; the walk returns to its start
    // vertex, which yields the explicit first-vertex repetition.
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        if (used[static_cast<size_t>(s)]) continue;
        auto line = walk(segments[static_cast<size_t>(s)].e1, s);
        if (line.front() != line.back()) line.push_back(line.front());
        out.polylines.push_back(std::move(line));
    }
    return out;
}

} // namespace rr1
