#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lasa/sampler.hpp"
#include "lasa/simulate.hpp"

namespace lasa {

// One scored estimate for one simulated replicate.
struct BenchmarkRow {
    int k_true = 0;
    int n = 0;
    double sigma2 = 0.0;
    bool equilateral = false;
    int replicate = 0;
    std::string method;  // "map", "ppm", or "hull"
    double mcc = 0.0;
    double ari = 0.0;
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    double runtime_seconds = 0.0;  // sampler wall time for the replicate
};

struct ScenarioMedians {
    double mcc = 0.0;
    double ari = 0.0;
    double runtime_seconds = 0.0;
};

struct BenchmarkResults {
    std::vector<BenchmarkRow> rows;
    // keyed by (k_true, n, sigma2, equilateral, method)
    std::map<std::tuple<int, int, double, bool, std::string>, ScenarioMedians> medians;
};

// Simulates each scenario's replicates with derived seeds (scenario seed +
// replicate index), runs the sampler, and scores the MAP estimate, the
// PPM/Dahl estimate, and the convex-hull baseline against the truth.
BenchmarkResults run_benchmark(std::span<const SimScenario> scenarios,
                               const SamplerConfig& sampler_config);

void write_benchmark_csv(const std::filesystem::path& path, const BenchmarkResults& results);

}  // namespace lasa
