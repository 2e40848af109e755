#include "lasa/posterior.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lasa/errors.hpp"

namespace lasa {

namespace {
constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

Hyperparameters Hyperparameters::recommended(std::size_t n_distinct, double k_hat) {
    const double n = static_cast<double>(n_distinct) + 1.0;
    Hyperparameters h;
    h.alpha_omega = 2.0 * k_hat / n;
    h.beta_omega = 2.0 - h.alpha_omega;
    h.alpha_sigma = 3.0;
    h.beta_sigma = 1.0 / static_cast<double>(n_distinct);
    h.k_hat = k_hat;
    h.validate();
    return h;
}

void Hyperparameters::validate() const {
    if (!(alpha_omega > 0.0) || !(beta_omega > 0.0)) {
        throw ConfigError("alpha_omega and beta_omega must be positive");
    }
    if (!(alpha_sigma > 2.0)) {
        throw ConfigError("alpha_sigma must exceed 2 so the inverse-gamma variance exists");
    }
    if (!(beta_sigma > 0.0)) {
        throw ConfigError("beta_sigma must be positive");
    }
    if (!(k_hat >= 3.0)) {
        throw ConfigError("k_hat must be at least 3");
    }
}

double segment_log_marglik(std::span<const double> d_star, const Hyperparameters& hyper) {
    const std::size_t n_k = d_star.size();
    if (n_k == 0) {
        throw InvalidInput("segment_log_marglik needs at least one distance");
    }
    double ssq = 0.0;
    for (double d : d_star) {
        if (!std::isfinite(d)) throw InvalidInput("non-finite distance in segment");
        ssq += d * d;
    }
    const double a = hyper.alpha_sigma;
    const double b = hyper.beta_sigma;
    const double half_nk = 0.5 * static_cast<double>(n_k);
    return -half_nk * kLog2Pi + std::lgamma(a + half_nk) - std::lgamma(a) + a * std::log(b) -
           (a + half_nk) * std::log(b + 0.5 * ssq);
}

double full_log_likelihood(const PolygonalChain& chain, const LandmarkIndicator& gamma,
                           const Hyperparameters& hyper) {
    if (!is_valid_gamma(gamma, chain)) {
        throw ConstraintViolation("full_log_likelihood requires a valid indicator for the chain");
    }
    const std::vector<int> landmarks = landmark_positions(gamma);
    const std::vector<Point2> poly = landmark_polygon(chain, gamma);
    const int m = static_cast<int>(chain.size());
    const int k = static_cast<int>(landmarks.size());

    double total = 0.0;
    for (int s = 0; s < k; ++s) {
        const int begin = landmarks[s];
        const int end = landmarks[(s + 1) % k];
        const LineCoefficients line = line_through(chain.vertices[begin], chain.vertices[end]);
        std::vector<double> d_star;
        for (int i = (begin + 1) % m; i != end; i = (i + 1) % m) {
            const bool inside = point_in_polygon(chain.vertices[i], poly);
            d_star.push_back(signed_distance(chain.vertices[i], line, inside));
        }
        total += segment_log_marglik(d_star, hyper);
    }
    return total;
}

double log_prior_for_count(int k, std::size_t n_distinct, const Hyperparameters& hyper) {
    const double a = hyper.alpha_omega;
    const double b = hyper.beta_omega;
    const double n = static_cast<double>(n_distinct) + 1.0;
    const double kd = static_cast<double>(k);
    return std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + std::lgamma(a + kd) +
           std::lgamma(b + n - kd) - std::lgamma(a + b + n);
}

double log_prior(const LandmarkIndicator& gamma, const PolygonalChain& chain,
                 const Hyperparameters& hyper) {
    if (!is_valid_gamma(gamma, chain)) return kNegInf;
    return log_prior_for_count(landmark_count(gamma), gamma.size(), hyper);
}

double log_posterior(const PolygonalChain& chain, const LandmarkIndicator& gamma,
                     const Hyperparameters& hyper) {
    if (gamma.size() != chain.size()) {
        throw InvalidInput("indicator length " + std::to_string(gamma.size()) +
                           " does not match chain size " + std::to_string(chain.size()));
    }
    if (!is_valid_gamma(gamma, chain)) return kNegInf;
    return log_prior_for_count(landmark_count(gamma), gamma.size(), hyper) +
           full_log_likelihood(chain, gamma, hyper);
}

}  // namespace lasa
