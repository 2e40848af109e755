#pragma once

#include <cstdint>
#include <vector>

#include "lasa/geometry.hpp"

namespace lasa {

// Binary landmark indicator over the m distinct vertices of a chain.
using LandmarkIndicator = std::vector<std::uint8_t>;

// Per-vertex segment labels in {1..K}; the cumulative-sum
// reparameterization of the indicator.
using SegmentLabels = std::vector<int>;

int landmark_count(const LandmarkIndicator& gamma);

// 0-based positions of the ones, ascending.
std::vector<int> landmark_positions(const LandmarkIndicator& gamma);

// True iff some pair of circularly adjacent entries are both set.
bool has_adjacent_landmarks(const LandmarkIndicator& gamma);

// K >= 3 and no circularly adjacent landmarks. The geometric condition
// (simple landmark chain) needs the chain; see is_valid_gamma.
bool is_structurally_valid(const LandmarkIndicator& gamma);

// Full prior-support test: structural validity plus a non-self-intersecting
// landmark chain.
bool is_valid_gamma(const LandmarkIndicator& gamma, const PolygonalChain& chain);

// The polygon formed by the landmark vertices in chain order.
std::vector<Point2> landmark_polygon(const PolygonalChain& chain, const LandmarkIndicator& gamma);

// Cumulative sum with the leading zeros filled with K.
// Throws ConstraintViolation when gamma is not structurally valid.
SegmentLabels gamma_to_z(const LandmarkIndicator& gamma);

// Circular lag-one difference with negative steps mapped to 1.
// Throws ConstraintViolation on labels that do not decode to a
// structurally valid indicator.
LandmarkIndicator z_to_gamma(const SegmentLabels& z);

// Cumulative-sum labels without validity constraints (K >= 1); used when
// scoring arbitrary predictions such as the convex-hull baseline.
SegmentLabels segment_labels_unchecked(const LandmarkIndicator& gamma);

// gamma with the pattern moved s positions to the right (circularly);
// negative s moves left.
LandmarkIndicator shift_indicator(const LandmarkIndicator& gamma, int s);

}  // namespace lasa
