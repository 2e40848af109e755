#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lasa::cli {

// Resolves --out-dir, the LASA_OUT_DIR environment variable, or ".".
std::string resolve_out_dir(const std::string& flag_value);

struct DetectOptions {
    std::string input;
    std::string format = "auto";
    std::uint64_t iterations = 0;  // 0 -> 100 * (m + 1)
    double burnin = 0.5;
    double k_hat = 3.0;
    double alpha_sigma = 3.0;
    double beta_sigma = 0.0;  // 0 -> 1 / n_distinct
    double alpha_omega = 0.0; // 0 -> 2 * k_hat / n
    double beta_omega = 0.0;
    int chains = 4;
    std::uint64_t seed = 0;
    int period = 20;
    int shift = 1;
    double interval_alpha = 0.05;
    bool ppm = true;
    bool raw_units = false;
    bool manifest_only = false;
    std::string out_dir;
};

struct SimulateOptions {
    int k = 4;
    int n = 140;
    double sigma2 = 0.5;
    bool equilateral = false;
    int replicates = 1;
    std::uint64_t seed = 0;
    bool manifest_only = false;
    std::string out_dir;
};

struct EvaluateOptions {
    std::string data_dir;
    std::string pred_dir;
    std::string method = "files";  // or "hull"
    int window = 5;
    std::string out_dir;
};

struct FeaturesOptions {
    std::string input;
    std::string format = "auto";
    std::string landmarks;  // indicator file; empty when --detect
    bool detect = false;
    std::vector<int> tbr_windows;  // empty -> {5, 50, 200}
    bool raw_units = false;
    std::string out_dir;
    // sampler settings for --detect
    std::uint64_t iterations = 0;
    double burnin = 0.5;
    double k_hat = 3.0;
    double alpha_sigma = 3.0;
    double beta_sigma = 0.0;
    int chains = 4;
    std::uint64_t seed = 0;
};

int run_detect(const DetectOptions& opt);
int run_simulate(const SimulateOptions& opt);
int run_evaluate(const EvaluateOptions& opt);
int run_features(const FeaturesOptions& opt);

}  // namespace lasa::cli
