#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lasa/indicator.hpp"
#include "lasa/sampler.hpp"

namespace lasa {

// Posterior pairwise probability matrix: c(i,j) is the fraction of pooled
// post-burn-in samples assigning vertices i and j to the same segment.
class Ppm {
public:
    explicit Ppm(int n_distinct);

    int size() const { return m_; }
    double at(int i, int j) const { return c_[static_cast<std::size_t>(i) * m_ + j]; }
    double& at(int i, int j) { return c_[static_cast<std::size_t>(i) * m_ + j]; }

private:
    int m_;
    std::vector<double> c_;
};

// Sampled gamma with the largest stored log posterior; ties break toward
// the earliest sample. Multi-trace overload pools in trace order.
LandmarkIndicator map_estimate(const McmcTrace& trace);
LandmarkIndicator map_estimate(std::span<const McmcTrace> traces);

// Co-segmentation fractions pooled over all traces. Dense storage; refuse
// chains past 20000 vertices rather than materialize the quadratic matrix.
Ppm compute_ppm(std::span<const McmcTrace> traces);

// Among the sampled segmentations, the one whose association matrix is
// closest to the PPM in summed squared deviation over unordered pairs.
LandmarkIndicator dahl_estimate(const Ppm& ppm, std::span<const McmcTrace> traces);

// Squared-deviation loss of one sample's association matrix against the PPM.
double dahl_loss(const Ppm& ppm, const LandmarkIndicator& gamma);

// Credible interval of one landmark: [lo, hi] holds unwrapped vertex
// indices (lo may go below 0 and hi past m-1 when the interval crosses the
// chain start); both sides always contain the landmark.
struct CredibleInterval {
    int landmark = 0;
    int lo = 0;
    int hi = 0;
};

// One-sided p-value for negative Pearson correlation between two binary
// sample vectors, via the t statistic with B-2 degrees of freedom.
// Returns NaN when either vector has zero variance.
double pearson_neg_corr_pvalue(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

// Expands around each landmark of the point estimate while the pooled
// samples at the neighboring offset stay significantly negatively
// correlated with the landmark's samples; stops at the first
// non-significant offset.
std::vector<CredibleInterval> credible_intervals(std::span<const McmcTrace> traces,
                                                 const LandmarkIndicator& point_estimate,
                                                 double alpha = 0.05);

// Convenience bundle for reporting.
struct LandmarkEstimate {
    LandmarkIndicator gamma_map;
    LandmarkIndicator gamma_ppm;  // Dahl least-squares estimate
    double map_log_post = 0.0;
    std::vector<CredibleInterval> intervals;  // around the MAP landmarks
};

LandmarkEstimate estimate_landmarks(std::span<const McmcTrace> traces, double alpha = 0.05);

}  // namespace lasa
