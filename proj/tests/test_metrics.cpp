#include <doctest.h>

#include <cmath>

#include "lasa/metrics.hpp"
#include "lasa/rng.hpp"
#include "lasa/stats.hpp"
#include "support/oracles.hpp"
#include "support/test_chains.hpp"

using namespace lasa;

namespace {
LandmarkIndicator random_indicator(int m, double p, Rng& rng) {
    LandmarkIndicator g(m);
    for (auto& v : g) v = rng.uniform() < p;
    return g;
}

SegmentLabels random_labels(int m, int k, Rng& rng) {
    SegmentLabels z(m);
    for (int& v : z) v = 1 + static_cast<int>(rng.uniform_below(k));
    return z;
}
}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("mcc basics") {
    const LandmarkIndicator t{1, 0, 0, 1, 0, 0, 1, 0, 0};
    CHECK(mcc(t, t) == doctest::Approx(1.0));

    LandmarkIndicator complement(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) complement[i] = 1 - t[i];
    CHECK(mcc(t, complement) < 0.0);

    CHECK(mcc(ConfusionMatrix{2, 5, 1, 1}) == doctest::Approx(0.5));

    // zero denominator convention
    CHECK(mcc(ConfusionMatrix{0, 9, 0, 0}) == 0.0);
    const LandmarkIndicator zeros(6, 0);
    CHECK(mcc(zeros, zeros) == 0.0);
}

TEST_CASE("mcc equals the Pearson correlation of the indicators") {
    Rng rng(2718);
    int compared = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 5 + static_cast<int>(rng.uniform_below(46));
        const LandmarkIndicator a = random_indicator(m, 0.3, rng);
        const LandmarkIndicator b = random_indicator(m, 0.3, rng);
        std::vector<double> xa(a.begin(), a.end()), xb(b.begin(), b.end());
        const double r = pearson_correlation(xa, xb);
        if (std::isnan(r)) {
            CHECK(mcc(a, b) == 0.0);  // constant vector -> zero-factor convention
            continue;
        }
        ++compared;
        CHECK(mcc(a, b) == doctest::Approx(r).epsilon(1e-12));
    }
    CHECK(compared > 300);
}

TEST_CASE("ari basics") {
    const SegmentLabels z{1, 1, 2, 2, 3, 3};
    CHECK(ari(z, z) == doctest::Approx(1.0));

    // label permutation leaves ARI unchanged
    const SegmentLabels permuted{3, 3, 1, 1, 2, 2};
    CHECK(ari(z, permuted) == doctest::Approx(1.0));

    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 5 + static_cast<int>(rng.uniform_below(46));
        const SegmentLabels a = random_labels(m, 3, rng);
        const SegmentLabels b = random_labels(m, 4, rng);
        CHECK(ari(a, b) == doctest::Approx(testing::contingency_ari(a, b)).epsilon(1e-10));
        CHECK(ari(a, b) <= 1.0 + 1e-12);
    }
}

TEST_CASE("ari of independent partitions is near zero on average") {
    Rng rng(555);
    double total = 0.0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
        total += ari(random_labels(100, 4, rng), random_labels(100, 4, rng));
    }
    CHECK(std::abs(total / trials) < 0.05);
}

TEST_CASE("windowed_match") {
    const int m = 40;
    LandmarkIndicator truth(m, 0);
    truth[5] = truth[15] = truth[25] = truth[35] = 1;

    SUBCASE("exact positions") {
        const ConfusionMatrix c = windowed_match(truth, truth, 5);
        CHECK(c.tp == 4);
        CHECK(c.fp == 0);
        CHECK(c.fn == 0);
        CHECK(c.tp + c.tn + c.fp + c.fn == m);
    }

    SUBCASE("offset within and past the window") {
        LandmarkIndicator offset(m, 0);
        offset[8] = offset[18] = offset[28] = offset[38] = 1;  // +3 each
        const ConfusionMatrix in5 = windowed_match(truth, offset, 5);
        CHECK(in5.tp == 4);
        CHECK(in5.fp == 0);
        const ConfusionMatrix in2 = windowed_match(truth, offset, 2);
        CHECK(in2.tp == 0);
        CHECK(in2.fp == 4);
        CHECK(in2.fn == 4);
    }

    SUBCASE("two predictions near one truth match once") {
        LandmarkIndicator truth1(m, 0);
        truth1[10] = 1;
        LandmarkIndicator pred(m, 0);
        pred[9] = pred[12] = 1;
        const ConfusionMatrix c = windowed_match(truth1, pred, 5);
        CHECK(c.tp == 1);
        CHECK(c.fp == 1);
        CHECK(c.fn == 0);
    }

    SUBCASE("circular distance wraps") {
        LandmarkIndicator t0(m, 0);
        t0[0] = 1;
        LandmarkIndicator p(m, 0);
        p[m - 2] = 1;  // circular distance 2
        const ConfusionMatrix c = windowed_match(t0, p, 5);
        CHECK(c.tp == 1);
    }
}

TEST_CASE("convex_hull_baseline") {
    const PolygonalChain convex = testing::unit_square_chain();
    CHECK(convex_hull_baseline(convex) == LandmarkIndicator{1, 1, 1, 1});

    std::vector<Point2> star;
    for (int i = 0; i < 12; ++i) {
        const double theta = 2.0 * 3.141592653589793 * i / 12;
        const double r = (i % 2 == 0) ? 4.0 : 1.0;
        star.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    const LandmarkIndicator gamma = convex_hull_baseline(make_chain(star));
    for (int i = 0; i < 12; ++i) {
        CHECK(gamma[i] == (i % 2 == 0 ? 1 : 0));
    }
    CHECK(landmark_count(gamma) >= 3);
}

TEST_SUITE_END();
