#pragma once

#include <cstdint>
#include <vector>

#include "lasa/geometry.hpp"
#include "lasa/indicator.hpp"
#include "lasa/rng.hpp"

namespace lasa {

struct SimScenario {
    int k_true = 4;
    int n = 140;  // closed-chain vertex count; the chain stores n-1 distinct vertices
    double sigma2 = 0.5;
    bool equilateral = false;
    int replicates = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SimulatedDataset {
    PolygonalChain chain;  // normalized, randomly rotated start
    LandmarkIndicator gamma_true;
    SimScenario scenario;
    double raw_length = 0.0;  // perturbed-chain perimeter before normalization
};

// Random simple polygon with k corners and every edge length in [50, 100]
// (one shared length when equilateral). Built as a random walk closed
// exactly by the last two edges; retries until simple, capped at 10000.
std::vector<Point2> generate_polygon(int k, bool equilateral, Rng& rng);

// Distributes n-1-k vertices over the polygon edges proportionally to
// edge length, displaces each perpendicular to its edge by N(0, sigma2),
// normalizes, and rotates the start index uniformly at random. Resamples
// the displacements when the chain self-intersects, capped at 1000.
SimulatedDataset bin_and_perturb(const std::vector<Point2>& polygon, int n, double sigma2,
                                 Rng& rng);

// One dataset of the scenario (replicate index only tags the output).
SimulatedDataset simulate_dataset(const SimScenario& scenario, Rng& rng);

}  // namespace lasa
