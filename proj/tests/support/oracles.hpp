#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "lasa/geometry.hpp"
#include "lasa/indicator.hpp"
#include "lasa/posterior.hpp"

namespace lasa::testing {

// Log of integral_0^inf MVN(d; 0, u I) IG(u; alpha, beta) du by Simpson's
// rule on t = log u. Straight-line quadrature, independent of the closed
// form under test.
inline double log_marglik_quadrature(std::span<const double> d, double alpha, double beta) {
    const double n_k = static_cast<double>(d.size());
    double ssq = 0.0;
    for (double x : d) ssq += x * x;

    auto log_integrand = [&](double t) {
        const double u = std::exp(t);
        return -0.5 * n_k * std::log(2.0 * 3.141592653589793 * u) - ssq / (2.0 * u) +
               alpha * std::log(beta) - std::lgamma(alpha) - (alpha + 1.0) * std::log(u) -
               beta / u + t;  // + t from du = e^t dt
    };

    const double t_peak = std::log((beta + 0.5 * ssq) / (alpha + 0.5 * n_k + 1.0));
    const double lo = t_peak - 80.0;
    const double hi = t_peak + 80.0;
    const int intervals = 32000;  // even
    const double h = (hi - lo) / intervals;

    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<double> logs(intervals + 1);
    for (int i = 0; i <= intervals; ++i) {
        logs[i] = log_integrand(lo + i * h);
        max_log = std::max(max_log, logs[i]);
    }
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
        const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * std::exp(logs[i] - max_log);
    }
    return max_log + std::log(sum * h / 3.0);
}

// Marginal prior mass of one configuration with K landmarks out of
// `trials` exchangeable Bernoulli draws, integrating the success
// probability against its Beta density by Simpson's rule.
inline double beta_bernoulli_quadrature(int k, int trials, double alpha, double beta) {
    auto integrand = [&](double w) {
        return std::pow(w, alpha - 1.0 + k) * std::pow(1.0 - w, beta - 1.0 + trials - k);
    };
    const int intervals = 200000;
    const double h = 1.0 / intervals;
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
        const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * integrand(i * h);
    }
    const double log_beta_norm =
        std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta);
    return sum * h / 3.0 / std::exp(log_beta_norm);
}

// O(m^3) hull-vertex test: a point is a hull vertex iff no triangle of
// other points contains it (closed containment catches collinear points).
inline std::vector<int> brute_force_hull(std::span<const Point2> pts) {
    const int m = static_cast<int>(pts.size());
    auto in_closed_triangle = [&](Point2 p, Point2 a, Point2 b, Point2 c) {
        const double d1 = orient(a, b, p);
        const double d2 = orient(b, c, p);
        const double d3 = orient(c, a, p);
        const bool has_neg = d1 < -1e-12 || d2 < -1e-12 || d3 < -1e-12;
        const bool has_pos = d1 > 1e-12 || d2 > 1e-12 || d3 > 1e-12;
        return !(has_neg && has_pos);
    };
    std::vector<int> hull;
    for (int p = 0; p < m; ++p) {
        bool extreme = true;
        for (int a = 0; a < m && extreme; ++a) {
            if (a == p) continue;
            for (int b = a + 1; b < m && extreme; ++b) {
                if (b == p) continue;
                for (int c = b + 1; c < m && extreme; ++c) {
                    if (c == p) continue;
                    if (in_closed_triangle(pts[p], pts[a], pts[b], pts[c])) extreme = false;
                }
            }
        }
        if (extreme) hull.push_back(p);
    }
    return hull;
}

// ARI through the Hubert-Arabie contingency-table formula; an algebraic
// route distinct from the pair-count evaluation in the library.
inline double contingency_ari(const std::vector<int>& za, const std::vector<int>& zb) {
    std::map<std::pair<int, int>, long long> joint;
    std::map<int, long long> ra, rb;
    for (std::size_t i = 0; i < za.size(); ++i) {
        ++joint[{za[i], zb[i]}];
        ++ra[za[i]];
        ++rb[zb[i]];
    }
    auto choose2 = [](long long x) { return static_cast<double>(x) * (x - 1) / 2.0; };
    double sum_joint = 0, sum_a = 0, sum_b = 0;
    for (const auto& [key, count] : joint) sum_joint += choose2(count);
    for (const auto& [key, count] : ra) sum_a += choose2(count);
    for (const auto& [key, count] : rb) sum_b += choose2(count);
    const double total = choose2(static_cast<long long>(za.size()));
    const double expected = sum_a * sum_b / total;
    const double max_index = 0.5 * (sum_a + sum_b);
    if (max_index == expected) return 1.0;
    return (sum_joint - expected) / (max_index - expected);
}

}  // namespace lasa::testing
