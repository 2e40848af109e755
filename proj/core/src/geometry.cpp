#include "lasa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lasa/errors.hpp"

namespace lasa {

namespace {
// Collinearity tolerance for orientation tests; coordinates are O(1)
// after normalization.
constexpr double kCollinearEps = 1e-12;

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Squared distance from v to the closed segment [a,b].
double segment_distance_sq(Point2 v, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        const Point2 av = v - a;
        return dot(av, av);
    }
    double t = dot(v - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 proj = a + t * ab;
    const Point2 d = v - proj;
    return dot(d, d);
}

bool on_segment_collinear(Point2 p, Point2 a, Point2 b) {
    return std::min(a.x, b.x) - kCollinearEps <= p.x && p.x <= std::max(a.x, b.x) + kCollinearEps &&
           std::min(a.y, b.y) - kCollinearEps <= p.y && p.y <= std::max(a.y, b.y) + kCollinearEps;
}
}  // namespace

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 p) { return std::hypot(p.x, p.y); }
double distance(Point2 a, Point2 b) { return norm(b - a); }

double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

PolygonalChain make_chain(std::vector<Point2> vertices, bool normalized) {
    const std::size_t m = vertices.size();
    if (m < 3) {
        throw InvalidInput("polygonal chain needs at least 3 distinct vertices, got " +
                           std::to_string(m));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!is_finite(vertices[i])) {
            throw InvalidInput("non-finite coordinate at vertex " + std::to_string(i + 1));
        }
        const Point2& next = vertices[(i + 1) % m];
        if (vertices[i] == next) {
            throw InvalidInput("consecutive duplicate vertex at position " + std::to_string(i + 1));
        }
    }
    // "Distinct" counts unique coordinates, not just consecutive ones.
    std::vector<Point2> sorted = vertices;
    std::sort(sorted.begin(), sorted.end(),
              [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    const auto last = std::unique(sorted.begin(), sorted.end());
    if (static_cast<std::size_t>(last - sorted.begin()) < 3) {
        throw InvalidInput("polygonal chain needs at least 3 distinct vertices");
    }
    return PolygonalChain{std::move(vertices), normalized};
}

double chain_length(const PolygonalChain& chain) {
    const std::size_t m = chain.size();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        total += distance(chain.vertices[i], chain.vertices[(i + 1) % m]);
    }
    return total;
}

Point2 centroid(const PolygonalChain& chain) {
    double sx = 0.0, sy = 0.0;
    for (const Point2& v : chain.vertices) {
        sx += v.x;
        sy += v.y;
    }
    const double m = static_cast<double>(chain.size());
    return {sx / m, sy / m};
}

PolygonalChain normalize(const PolygonalChain& chain) {
    const double len = chain_length(chain);
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw InvalidInput("cannot normalize a chain with zero or non-finite length");
    }
    const Point2 c = centroid(chain);
    std::vector<Point2> out;
    out.reserve(chain.size());
    for (const Point2& v : chain.vertices) {
        out.push_back({(v.x - c.x) / len, (v.y - c.y) / len});
    }
    return make_chain(std::move(out), true);
}

LineCoefficients line_through(Point2 p, Point2 q) {
    if (p == q) {
        throw InvalidInput("line_through requires two distinct points");
    }
    return {q.y - p.y, q.x - p.x, q.x * p.y - q.y * p.x};
}

double signed_distance(Point2 v, const LineCoefficients& line, bool inside) {
    const double denom = std::sqrt(line.a * line.a + line.b * line.b);
    const double magnitude = std::abs(line.a * v.x - line.b * v.y + line.c) / denom;
    return inside ? -magnitude : magnitude;
}

bool point_in_polygon(Point2 v, std::span<const Point2> polygon) {
    const std::size_t m = polygon.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (segment_distance_sq(v, polygon[i], polygon[(i + 1) % m]) <= kCollinearEps * kCollinearEps) {
            return false;  // boundary convention
        }
    }
    bool inside = false;
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
        const Point2 a = polygon[i];
        const Point2 b = polygon[j];
        if ((a.y > v.y) != (b.y > v.y)) {
            const double x_cross = (b.x - a.x) * (v.y - a.y) / (b.y - a.y) + a.x;
            if (v.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

bool segments_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
    const double d1 = orient(q1, q2, p1);
    const double d2 = orient(q1, q2, p2);
    const double d3 = orient(p1, p2, q1);
    const double d4 = orient(p1, p2, q2);

    if (((d1 > kCollinearEps && d2 < -kCollinearEps) || (d1 < -kCollinearEps && d2 > kCollinearEps)) &&
        ((d3 > kCollinearEps && d4 < -kCollinearEps) || (d3 < -kCollinearEps && d4 > kCollinearEps))) {
        return true;
    }
    if (std::abs(d1) <= kCollinearEps && on_segment_collinear(p1, q1, q2)) return true;
    if (std::abs(d2) <= kCollinearEps && on_segment_collinear(p2, q1, q2)) return true;
    if (std::abs(d3) <= kCollinearEps && on_segment_collinear(q1, p1, p2)) return true;
    if (std::abs(d4) <= kCollinearEps && on_segment_collinear(q2, p1, p2)) return true;
    return false;
}

bool is_self_intersecting(std::span<const Point2> polygon) {
    const std::size_t m = polygon.size();
    if (m < 3) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const Point2 a1 = polygon[i];
        const Point2 a2 = polygon[(i + 1) % m];
        for (std::size_t j = i + 1; j < m; ++j) {
            const Point2 b1 = polygon[j];
            const Point2 b2 = polygon[(j + 1) % m];
            const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (adjacent) {
                // Shared endpoint is fine; collinear overlap beyond it is not.
                const Point2 shared = (j == i + 1) ? a2 : a1;
                const Point2 tail_a = (j == i + 1) ? a1 : a2;
                const Point2 tail_b = (j == i + 1) ? b2 : b1;
                if (std::abs(orient(tail_a, shared, tail_b)) <= kCollinearEps &&
                    dot(tail_a - shared, tail_b - shared) > 0.0) {
                    return true;
                }
            } else if (segments_intersect(a1, a2, b1, b2)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<int> convex_hull_indices(std::span<const Point2> points) {
    const int m = static_cast<int>(points.size());
    if (m < 3) throw InvalidInput("convex hull needs at least 3 points");

    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return points[i].x < points[j].x ||
               (points[i].x == points[j].x && points[i].y < points[j].y);
    });
    // Drop exact coordinate duplicates so they cannot break the turn test.
    order.erase(std::unique(order.begin(), order.end(),
                            [&](int i, int j) { return points[i] == points[j]; }),
                order.end());

    auto build = [&](auto begin, auto end) {
        std::vector<int> h;
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= 2 &&
                   orient(points[h[h.size() - 2]], points[h.back()], points[*it]) <= kCollinearEps) {
                h.pop_back();
            }
            h.push_back(*it);
        }
        return h;
    };
    std::vector<int> lower = build(order.begin(), order.end());
    std::vector<int> upper = build(order.rbegin(), order.rend());

    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) {
        throw InvalidInput("convex hull is degenerate: all points are collinear");
    }
    std::sort(lower.begin(), lower.end());
    return lower;
}

std::vector<int> convex_hull(const PolygonalChain& chain) {
    return convex_hull_indices(chain.vertices);
}

double polygon_area(std::span<const Point2> polygon) {
    const std::size_t m = polygon.size();
    double twice = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point2 a = polygon[i];
        const Point2 b = polygon[(i + 1) % m];
        twice += cross(a, b);
    }
    return std::abs(twice) / 2.0;
}

}  // namespace lasa
