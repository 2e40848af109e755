#pragma once

#include <span>
#include <vector>

namespace lasa {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
double norm(Point2 p);
double distance(Point2 a, Point2 b);

// Cross product of (b-a) and (c-a); positive for a left turn.
double orient(Point2 a, Point2 b, Point2 c);

// Closed polygonal chain V_1..V_m; the closing vertex V_{m+1} = V_1 is
// implicit, so `vertices` holds only the m distinct vertices.
struct PolygonalChain {
    std::vector<Point2> vertices;
    bool normalized = false;

    std::size_t size() const { return vertices.size(); }
    const Point2& operator[](std::size_t i) const { return vertices[i]; }
};

// Validates the chain invariants (>= 3 distinct vertices, finite
// coordinates, no consecutive duplicates) and returns the chain.
// Throws InvalidInput on violation.
PolygonalChain make_chain(std::vector<Point2> vertices, bool normalized = false);

// Perimeter including the implicit closing edge.
double chain_length(const PolygonalChain& chain);

// Arithmetic mean of the distinct vertices.
Point2 centroid(const PolygonalChain& chain);

// Rescales to unit perimeter and recenters at the origin.
PolygonalChain normalize(const PolygonalChain& chain);

// Line a*x - b*y + c = 0 through two landmarks.
struct LineCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

LineCoefficients line_through(Point2 p, Point2 q);

// Shortest distance from v to the line, negated when `inside` is set.
double signed_distance(Point2 v, const LineCoefficients& line, bool inside);

// Strict interior test (even-odd rule). Points within 1e-12 of an edge
// count as boundary and return false; their distance to the landmark
// chain is ~0 so the sign does not matter.
bool point_in_polygon(Point2 v, std::span<const Point2> polygon);

// True iff two closed segments [p1,p2] and [q1,q2] share any point.
bool segments_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2);

// True iff any two non-adjacent closed edges of the polygon touch, or
// adjacent edges overlap beyond their shared endpoint.
bool is_self_intersecting(std::span<const Point2> polygon);

// Indices of the convex hull vertices (strict corners only, collinear
// boundary points excluded), sorted ascending. Throws InvalidInput when
// all points are collinear.
std::vector<int> convex_hull_indices(std::span<const Point2> points);
std::vector<int> convex_hull(const PolygonalChain& chain);

// |shoelace|/2 over the distinct vertices.
double polygon_area(std::span<const Point2> polygon);

}  // namespace lasa
