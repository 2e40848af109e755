#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "lasa/indicator.hpp"
#include "lasa/posterior.hpp"

namespace lasa::testing {

// Exhaustive posterior over every valid indicator of a small chain.
// Independent route for checking the sampler: it never touches the
// sampler's incremental cache.
struct ExactPosterior {
    std::vector<LandmarkIndicator> configs;
    std::vector<double> log_post;  // aligned
    LandmarkIndicator mode;
    double mode_log_post = 0.0;

    std::map<LandmarkIndicator, double> probabilities() const {
        double mx = mode_log_post;
        double z = 0.0;
        for (double lp : log_post) z += std::exp(lp - mx);
        std::map<LandmarkIndicator, double> out;
        for (std::size_t i = 0; i < configs.size(); ++i) {
            out[configs[i]] = std::exp(log_post[i] - mx) / z;
        }
        return out;
    }
};

inline ExactPosterior enumerate_posterior(const PolygonalChain& chain,
                                          const Hyperparameters& hyper) {
    const int m = static_cast<int>(chain.size());
    ExactPosterior out;
    out.mode_log_post = -std::numeric_limits<double>::infinity();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        LandmarkIndicator gamma(m);
        for (int i = 0; i < m; ++i) gamma[i] = (mask >> i) & 1;
        if (!is_valid_gamma(gamma, chain)) continue;
        const double lp = log_posterior(chain, gamma, hyper);
        out.configs.push_back(gamma);
        out.log_post.push_back(lp);
        if (lp > out.mode_log_post) {
            out.mode_log_post = lp;
            out.mode = gamma;
        }
    }
    return out;
}

}  // namespace lasa::testing
