#pragma once

#include <span>
#include <vector>

#include "lasa/geometry.hpp"
#include "lasa/indicator.hpp"

namespace lasa {

// Signed distances of the non-landmark vertices, grouped by segment in
// segment order. Undefined feature values are reported as NaN throughout
// this module; CSV writers render them as empty cells.
struct PiecewiseDistances {
    std::vector<int> segment_begin;             // opening landmark of each segment
    std::vector<std::vector<double>> segments;  // distances per segment
};

PiecewiseDistances piecewise_distances(const PolygonalChain& chain, const LandmarkIndicator& gamma);

// Table of distance-based surface-profile measures for one segment.
struct RoughnessVector {
    double ra = 0.0;     // arithmetical mean deviation
    double rq = 0.0;     // root mean square
    double rv = 0.0;     // maximum valley depth |min d|
    double rp = 0.0;     // maximum peak height max d
    double rz = 0.0;     // rv + rp
    double rsk = 0.0;    // skewness about zero; NaN when rq == 0
    double rku = 0.0;    // kurtosis about zero; NaN when rq == 0
    double rzjis = 0.0;  // mean peak-to-valley gap over up to five disjoint pairs
};

RoughnessVector roughness_measures(std::span<const double> d_star);

// Sign states: 1 for d >= 0 ('+', outside the landmark chain), 0 for '-'.
std::vector<std::uint8_t> sign_states(std::span<const double> d_star);

// Empirical transition frequencies between consecutive sign states within
// one segment. A row with no outgoing transitions is NaN; a segment with
// fewer than two states has no transitions at all.
struct TransitionFeatures {
    double a_pp = 0.0;
    double a_pm = 0.0;
    double a_mp = 0.0;
    double a_mm = 0.0;
};

TransitionFeatures transition_probabilities(std::span<const std::uint8_t> states);

// Distance from each vertex to the chain centroid.
std::vector<double> radial_distances(const PolygonalChain& chain);

// Crossings of the radial profile through its mean, with the closing pair
// included (the boundary is circular).
int zero_crossing_count(std::span<const double> r);

// Mean windowed roughness index of the radial profile: windows of length L
// in vertex order, the final partial window using whatever indices remain.
double tumor_boundary_roughness(std::span<const double> r, int window);

// Cross-segment moments: sample sd (n-1 denominator), population central
// moments for skewness and kurtosis.
struct MomentSummary {
    double mean = 0.0;
    double sd = 0.0;
    double skewness = 0.0;  // NaN when variance is zero or count < 3
    double kurtosis = 0.0;  // NaN when variance is zero or count < 3
    int count = 0;
};

MomentSummary summarize_moments(std::span<const double> values);

// One row per segment, pairing the Table-style measures with the sign
// transition features.
struct SegmentFeatureRow {
    int segment = 0;  // 1-based
    int n_k = 0;
    RoughnessVector rough;
    TransitionFeatures trans;
};

std::vector<SegmentFeatureRow> compute_segment_features(const PolygonalChain& chain,
                                                        const LandmarkIndicator& gamma);

// Per-chain summary: landmark count, raw-units area, radial baselines, and
// the moments of every per-segment feature (NaN segment values excluded).
struct ChainFeatures {
    int k = 0;
    double area = 0.0;
    int zcc = 0;
    std::vector<std::pair<int, double>> tbr;  // (window, value)
    MomentSummary ra, rq, rv, rp, rz, rsk, rku, rzjis;
    MomentSummary a_pp, a_pm, a_mp, a_mm;
};

ChainFeatures compute_chain_features(const PolygonalChain& chain, const LandmarkIndicator& gamma,
                                     double raw_area, std::span<const int> tbr_windows);

}  // namespace lasa
