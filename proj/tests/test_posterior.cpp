#include <doctest.h>

#include <cmath>

#include "lasa/errors.hpp"
#include "lasa/posterior.hpp"
#include "lasa/rng.hpp"
#include "support/oracles.hpp"
#include "support/test_chains.hpp"

using namespace lasa;

namespace {
Hyperparameters test_hyper(double alpha_sigma = 3.0, double beta_sigma = 0.01) {
    Hyperparameters h;
    h.alpha_omega = 0.06;
    h.beta_omega = 1.94;
    h.alpha_sigma = alpha_sigma;
    h.beta_sigma = beta_sigma;
    h.k_hat = 3.0;
    return h;
}
}  // namespace

TEST_SUITE_BEGIN("posterior");

TEST_CASE("segment_log_marglik closed form matches the frozen value") {
    const std::vector<double> d{0.0};
    // log[(2*pi)^{-1/2} * (Gamma(3.5)/Gamma(3)) * 0.01^{-1/2}]
    CHECK(segment_log_marglik(d, test_hyper()) == doctest::Approx(1.8914729815765003).epsilon(1e-12));
}

TEST_CASE("segment_log_marglik agrees with numerical integration") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n_k = 1 + static_cast<int>(rng.uniform_below(10));
        std::vector<double> d(n_k);
        for (double& x : d) x = rng.uniform_range(-0.3, 0.3);
        const Hyperparameters h = test_hyper(3.0, rng.uniform_range(0.005, 0.5));
        const double expected = testing::log_marglik_quadrature(d, h.alpha_sigma, h.beta_sigma);
        CHECK(std::abs(segment_log_marglik(d, h) - expected) < 1e-8);
    }
}

TEST_CASE("segment_log_marglik decreases in d'd and ignores order") {
    const Hyperparameters h = test_hyper();
    const std::vector<double> small{0.1, -0.1, 0.05};
    const std::vector<double> large{0.2, -0.2, 0.1};
    CHECK(segment_log_marglik(small, h) > segment_log_marglik(large, h));
    const std::vector<double> permuted{-0.1, 0.05, 0.1};
    CHECK(segment_log_marglik(small, h) == doctest::Approx(segment_log_marglik(permuted, h)));
    CHECK_THROWS_AS(segment_log_marglik(std::vector<double>{}, h), InvalidInput);
    CHECK_THROWS_AS(segment_log_marglik(std::vector<double>{std::nan("")}, h), InvalidInput);
}

TEST_CASE("full_log_likelihood equals an independent straight-line recomputation") {
    const PolygonalChain chain = testing::poly_chain({{0, 0}, {9, 1}, {8, 7}, {-1, 8}},
                                                     {1, 1, 1, 1}, 0.25);
    const Hyperparameters h = test_hyper();
    const LandmarkIndicator gamma{1, 0, 1, 0, 1, 0, 1, 0};

    // brute-force route: recompute every distance from scratch
    const std::vector<int> landmarks = landmark_positions(gamma);
    const std::vector<Point2> poly = landmark_polygon(chain, gamma);
    const int m = static_cast<int>(chain.size());
    const int k = static_cast<int>(landmarks.size());
    double expected = 0.0;
    for (int s = 0; s < k; ++s) {
        const int begin = landmarks[s];
        const int end = landmarks[(s + 1) % k];
        std::vector<double> d;
        for (int i = (begin + 1) % m; i != end; i = (i + 1) % m) {
            const LineCoefficients line = line_through(chain.vertices[begin], chain.vertices[end]);
            const bool inside = point_in_polygon(chain.vertices[i], poly);
            d.push_back(signed_distance(chain.vertices[i], line, inside));
        }
        expected += segment_log_marglik(d, h);
    }
    CHECK(full_log_likelihood(chain, gamma, h) == doctest::Approx(expected).epsilon(1e-10));
    CHECK_THROWS_AS(full_log_likelihood(chain, LandmarkIndicator{1, 1, 0, 0, 1, 0, 0, 0}, h),
                    ConstraintViolation);
}

TEST_CASE("log_prior depends on gamma only through K") {
    const PolygonalChain chain = testing::symmetric_pentagon_chain();
    const Hyperparameters h = test_hyper();
    const LandmarkIndicator a{1, 0, 1, 0, 1, 0, 0, 0, 0, 0};
    const LandmarkIndicator b{0, 1, 0, 0, 1, 0, 0, 1, 0, 0};
    CHECK(log_prior(a, chain, h) == doctest::Approx(log_prior(b, chain, h)));
    CHECK(log_prior(LandmarkIndicator{1, 1, 1, 0, 0, 0, 0, 0, 0, 0}, chain, h) ==
          -std::numeric_limits<double>::infinity());
}

TEST_CASE("log_prior penalizes K past k_hat under the recommended setting") {
    const Hyperparameters h = Hyperparameters::recommended(99, 3.0);  // n = 100
    for (int k = 3; k < 20; ++k) {
        CHECK(log_prior_for_count(k + 1, 99, h) < log_prior_for_count(k, 99, h));
    }
}

TEST_CASE("log_prior ratio matches beta-Bernoulli quadrature") {
    Hyperparameters h = test_hyper();
    h.alpha_omega = 1.0;
    h.beta_omega = 1.0;
    const std::size_t m = 12;           // distinct vertices
    const int trials = static_cast<int>(m) + 1;  // the prior counts the closure vertex
    for (int k = 3; k <= 6; ++k) {
        const double ratio =
            log_prior_for_count(k + 1, m, h) - log_prior_for_count(k, m, h);
        const double oracle =
            std::log(testing::beta_bernoulli_quadrature(k + 1, trials, 1.0, 1.0)) -
            std::log(testing::beta_bernoulli_quadrature(k, trials, 1.0, 1.0));
        CHECK(ratio == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("log_posterior is the sum of its parts and -inf off support") {
    const PolygonalChain chain = testing::symmetric_pentagon_chain();
    const Hyperparameters h = test_hyper();
    const LandmarkIndicator gamma{1, 0, 1, 0, 1, 0, 1, 0, 1, 0};
    CHECK(log_posterior(chain, gamma, h) ==
          doctest::Approx(log_prior(gamma, chain, h) + full_log_likelihood(chain, gamma, h)));
    CHECK(log_posterior(chain, LandmarkIndicator{1, 1, 1, 0, 0, 0, 0, 0, 0, 0}, h) ==
          -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(log_posterior(chain, LandmarkIndicator{1, 0, 1}, h), InvalidInput);
}

TEST_CASE("log_posterior is invariant under cyclic relabeling") {
    const PolygonalChain chain = testing::poly_chain({{0, 0}, {11, -1}, {13, 9}, {1, 10}},
                                                     {2, 2, 2, 2}, 0.35);
    const Hyperparameters h = test_hyper();
    const LandmarkIndicator gamma{1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0};
    const double base = log_posterior(chain, gamma, h);
    for (int r = 1; r < static_cast<int>(chain.size()); ++r) {
        PolygonalChain rotated = chain;
        std::rotate(rotated.vertices.begin(), rotated.vertices.begin() + r, rotated.vertices.end());
        LandmarkIndicator rg = gamma;
        std::rotate(rg.begin(), rg.begin() + r, rg.end());
        CHECK(log_posterior(rotated, rg, h) == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("log_posterior is invariant to input scale and translation") {
    const PolygonalChain base = testing::poly_chain({{0, 0}, {11, -1}, {13, 9}, {1, 10}},
                                                    {2, 2, 2, 2}, 0.35, false);
    const Hyperparameters h = test_hyper();
    const LandmarkIndicator gamma{1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0};
    const double reference = log_posterior(normalize(base), gamma, h);
    Rng rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        PolygonalChain moved = base;
        const double scale = std::exp(rng.uniform_range(-2, 2));
        const Point2 shift{rng.uniform_range(-100, 100), rng.uniform_range(-100, 100)};
        for (Point2& v : moved.vertices) v = scale * v + shift;
        CHECK(log_posterior(normalize(moved), gamma, h) == doctest::Approx(reference).epsilon(1e-9));
    }
}

TEST_CASE("hyperparameter validation") {
    CHECK_THROWS_AS(Hyperparameters::recommended(99, 2.0), ConfigError);
    Hyperparameters bad = test_hyper();
    bad.alpha_sigma = 2.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = test_hyper();
    bad.beta_sigma = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    const Hyperparameters rec = Hyperparameters::recommended(139, 3.0);
    CHECK(rec.alpha_omega == doctest::Approx(2.0 * 3 / 140));
    CHECK(rec.alpha_omega + rec.beta_omega == doctest::Approx(2.0));
    CHECK(rec.beta_sigma == doctest::Approx(1.0 / 139));
}

TEST_SUITE_END();
