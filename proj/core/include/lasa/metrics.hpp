#pragma once

#include <cstdint>

#include "lasa/geometry.hpp"
#include "lasa/indicator.hpp"

namespace lasa {

struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t tn = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
};

// Entry-wise confusion between true and estimated indicators.
ConfusionMatrix confusion(const LandmarkIndicator& truth, const LandmarkIndicator& estimate);

// Matthews correlation coefficient; 0 when any denominator factor
// vanishes.
double mcc(const ConfusionMatrix& c);
double mcc(const LandmarkIndicator& truth, const LandmarkIndicator& estimate);

// Adjusted Rand index between two segmentations, evaluated from the four
// pair counts over unordered vertex pairs.
double ari(const SegmentLabels& z_truth, const SegmentLabels& z_estimate);

// Greedy one-to-one matching of estimated landmarks to true landmarks
// within circular index distance <= window; unmatched estimates are FP,
// unmatched truths FN, everything else TN.
ConfusionMatrix windowed_match(const LandmarkIndicator& truth, const LandmarkIndicator& estimate,
                               int window = 5);

// Indicator with ones exactly at the convex hull vertices.
LandmarkIndicator convex_hull_baseline(const PolygonalChain& chain);

}  // namespace lasa
