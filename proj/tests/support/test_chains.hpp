#pragma once

#include <vector>

#include "lasa/geometry.hpp"

namespace lasa::testing {

// Polygon corners with `per[e]` extra vertices spread along edge e, each
// displaced perpendicular by an alternating +/- jitter. Deterministic, so
// tests can reason about the exact geometry.
inline PolygonalChain poly_chain(const std::vector<Point2>& corners, const std::vector<int>& per,
                                 double jitter, bool normalized = true) {
    std::vector<Point2> pts;
    int idx = 0;
    const int k = static_cast<int>(corners.size());
    for (int e = 0; e < k; ++e) {
        const Point2 a = corners[e];
        const Point2 b = corners[(e + 1) % k];
        pts.push_back(a);
        const Point2 edge = b - a;
        const double len = norm(edge);
        const Point2 unit_perp{-edge.y / len, edge.x / len};
        for (int j = 1; j <= per[e]; ++j) {
            const double t = static_cast<double>(j) / (per[e] + 1);
            const double d = (idx++ % 2) ? jitter : -jitter;
            pts.push_back(a + t * edge + d * unit_perp);
        }
    }
    PolygonalChain chain = make_chain(std::move(pts));
    return normalized ? normalize(chain) : chain;
}

inline PolygonalChain unit_square_chain() {
    return make_chain({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// The five oracle chains used by the exact-enumeration acceptance tests
// (12 to 16 distinct vertices, pronounced corners, heavy jitter).
inline std::vector<PolygonalChain> oracle_chains() {
    return {
        poly_chain({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, {2, 2, 2, 2}, 0.4),
        poly_chain({{0, 0}, {12, 0}, {14, 9}, {-2, 8}}, {2, 2, 2, 3}, 0.45),
        poly_chain({{0, 0}, {8, -3}, {12, 5}, {4, 9}, {-4, 4}}, {1, 2, 2, 2, 2}, 0.4),
        poly_chain({{0, 0}, {10, -3}, {13, 7}, {5, 12}, {-4, 6}}, {2, 2, 2, 2, 2}, 0.4),
        poly_chain({{0, 0}, {9, -2}, {14, 6}, {7, 11}, {-3, 6}}, {2, 2, 2, 3, 2}, 0.45),
    };
}

// Ten-vertex chain with near five-fold symmetry; the partial-shift move
// hops between the symmetric modes, which keeps mixing fast.
inline PolygonalChain symmetric_pentagon_chain(double jitter = 0.25) {
    const double r = 5.0;
    std::vector<Point2> corners;
    for (int i = 0; i < 5; ++i) {
        const double theta = 2.0 * 3.141592653589793 * i / 5 + 0.3;
        corners.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return poly_chain(corners, {1, 1, 1, 1, 1}, jitter);
}

}  // namespace lasa::testing
