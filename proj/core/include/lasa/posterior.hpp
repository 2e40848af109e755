#pragma once

#include <span>

#include "lasa/geometry.hpp"
#include "lasa/indicator.hpp"

namespace lasa {

// Prior settings. The beta-Bernoulli prior on the indicator is governed
// by (alpha_omega, beta_omega); each segment's variance carries an
// inverse-gamma (alpha_sigma, beta_sigma) prior that is integrated out
// analytically, so no variance appears in runtime state.
struct Hyperparameters {
    double alpha_omega = 0.0;
    double beta_omega = 0.0;
    double alpha_sigma = 3.0;
    double beta_sigma = 0.0;
    double k_hat = 3.0;  // landmarks expected a priori; also the initial count

    // Recommended setting for a chain with n_distinct vertices:
    // alpha_omega = 2*k_hat/n, beta_omega = 2 - alpha_omega (n counts the
    // repeated closure vertex), alpha_sigma = 3, beta_sigma = 1/n_distinct.
    static Hyperparameters recommended(std::size_t n_distinct, double k_hat = 3.0);

    // Throws ConfigError on out-of-range values.
    void validate() const;
};

// Log of the marginal segment density: the multivariate normal on the
// segment's signed distances integrated against the inverse-gamma prior
// on its variance, which yields a multivariate Student-t form
//
//   (2*pi)^{-n_k/2} * G(a+n_k/2)/G(a) * b^a / (b + d'd/2)^{a+n_k/2}
//
// evaluated entirely in log space.
double segment_log_marglik(std::span<const double> d_star, const Hyperparameters& hyper);

// Sum of segment_log_marglik over the K segments induced by gamma, with
// distances taken against the line through each segment's bounding
// landmarks. Throws ConstraintViolation when gamma is invalid for the chain.
double full_log_likelihood(const PolygonalChain& chain, const LandmarkIndicator& gamma,
                           const Hyperparameters& hyper);

// Marginalized beta-Bernoulli prior; -inf outside the support (K < 3,
// adjacent landmarks, self-intersecting landmark chain). The chain is
// needed for the geometric condition.
double log_prior(const LandmarkIndicator& gamma, const PolygonalChain& chain,
                 const Hyperparameters& hyper);

// Prior value as a function of the landmark count only (the indicator
// enters the prior through K alone).
double log_prior_for_count(int k, std::size_t n_distinct, const Hyperparameters& hyper);

// Unnormalized log posterior; -inf for gammas outside the prior support.
double log_posterior(const PolygonalChain& chain, const LandmarkIndicator& gamma,
                     const Hyperparameters& hyper);

}  // namespace lasa
