#include "lasa/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "lasa/errors.hpp"

namespace lasa {

ConfusionMatrix confusion(const LandmarkIndicator& truth, const LandmarkIndicator& estimate) {
    if (truth.size() != estimate.size()) {
        throw InvalidInput("confusion requires equal-length indicators");
    }
    ConfusionMatrix c;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] && estimate[i]) ++c.tp;
        else if (!truth[i] && !estimate[i]) ++c.tn;
        else if (!truth[i] && estimate[i]) ++c.fp;
        else ++c.fn;
    }
    return c;
}

double mcc(const ConfusionMatrix& c) {
    const double tp = static_cast<double>(c.tp);
    const double tn = static_cast<double>(c.tn);
    const double fp = static_cast<double>(c.fp);
    const double fn = static_cast<double>(c.fn);
    const double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
    if (denom == 0.0) return 0.0;
    return (tp * tn - fp * fn) / std::sqrt(denom);
}

double mcc(const LandmarkIndicator& truth, const LandmarkIndicator& estimate) {
    return mcc(confusion(truth, estimate));
}

double ari(const SegmentLabels& z_truth, const SegmentLabels& z_estimate) {
    if (z_truth.size() != z_estimate.size()) {
        throw InvalidInput("ari requires equal-length label vectors");
    }
    const std::size_t m = z_truth.size();
    // n1: together in both; n2: together in truth only; n3: together in
    // estimate only; n4: apart in both.
    long double n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool same_t = z_truth[i] == z_truth[j];
            const bool same_e = z_estimate[i] == z_estimate[j];
            if (same_t && same_e) ++n1;
            else if (same_t) ++n2;
            else if (same_e) ++n3;
            else ++n4;
        }
    }
    const long double pairs = n1 + n2 + n3 + n4;
    const long double expected = (n1 + n2) * (n1 + n3) + (n3 + n4) * (n2 + n4);
    const long double numerator = pairs * (n1 + n4) - expected;
    const long double denominator = pairs * pairs - expected;
    if (denominator == 0.0L) return 1.0;  // both partitions trivial
    return static_cast<double>(numerator / denominator);
}

ConfusionMatrix windowed_match(const LandmarkIndicator& truth, const LandmarkIndicator& estimate,
                               int window) {
    if (truth.size() != estimate.size()) {
        throw InvalidInput("windowed_match requires equal-length indicators");
    }
    const int m = static_cast<int>(truth.size());
    const std::vector<int> t_pos = landmark_positions(truth);
    const std::vector<int> e_pos = landmark_positions(estimate);

    auto circular_dist = [m](int a, int b) {
        const int d = std::abs(a - b);
        return std::min(d, m - d);
    };

    // All candidate pairs within the window, matched greedily by distance.
    struct Pair {
        int dist;
        int t;
        int e;
    };
    std::vector<Pair> candidates;
    for (std::size_t t = 0; t < t_pos.size(); ++t) {
        for (std::size_t e = 0; e < e_pos.size(); ++e) {
            const int d = circular_dist(t_pos[t], e_pos[e]);
            if (d <= window) candidates.push_back({d, static_cast<int>(t), static_cast<int>(e)});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Pair& a, const Pair& b) { return a.dist < b.dist; });

    std::vector<bool> t_used(t_pos.size(), false), e_used(e_pos.size(), false);
    std::int64_t matched = 0;
    for (const Pair& p : candidates) {
        if (!t_used[p.t] && !e_used[p.e]) {
            t_used[p.t] = true;
            e_used[p.e] = true;
            ++matched;
        }
    }
    ConfusionMatrix c;
    c.tp = matched;
    c.fp = static_cast<std::int64_t>(e_pos.size()) - matched;
    c.fn = static_cast<std::int64_t>(t_pos.size()) - matched;
    c.tn = m - c.tp - c.fp - c.fn;
    return c;
}

LandmarkIndicator convex_hull_baseline(const PolygonalChain& chain) {
    LandmarkIndicator gamma(chain.size(), 0);
    for (int i : convex_hull(chain)) gamma[i] = 1;
    return gamma;
}

}  // namespace lasa
