#include "lasa/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "lasa/errors.hpp"

namespace lasa {

namespace {
constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
constexpr int kInitAttempts = 1000;

// Landmark list of the proposed gamma without materializing the gamma.
// Returns false when the result is structurally invalid.
bool proposed_landmarks(const ChainState& state, const Proposal& proposal, int m,
                        std::vector<int>& out) {
    const std::vector<int>& cur = state.landmarks;
    out.clear();
    switch (proposal.kind) {
        case Proposal::Kind::AddDelete: {
            const int i = proposal.flip;
            if (state.gamma[i]) {
                for (int l : cur) {
                    if (l != i) out.push_back(l);
                }
            } else {
                out = cur;
                out.insert(std::upper_bound(out.begin(), out.end(), i), i);
            }
            break;
        }
        case Proposal::Kind::Swap: {
            for (int l : cur) {
                if (l != proposal.remove) out.push_back(l);
            }
            out.insert(std::upper_bound(out.begin(), out.end(), proposal.add), proposal.add);
            break;
        }
        case Proposal::Kind::Shift: {
            const int s = proposal.shift;
            for (int l : cur) out.push_back(((l + s) % m + m) % m);
            std::sort(out.begin(), out.end());
            break;
        }
    }
    if (static_cast<int>(out.size()) < 3) return false;
    // No circularly adjacent pair (the list is sorted and duplicate-free).
    for (std::size_t s = 0; s + 1 < out.size(); ++s) {
        if (out[s + 1] - out[s] < 2) return false;
    }
    if (out.front() + m - out.back() < 2) return false;
    return true;
}

LandmarkIndicator apply_to_gamma(const ChainState& state, const Proposal& proposal) {
    LandmarkIndicator gamma = state.gamma;
    switch (proposal.kind) {
        case Proposal::Kind::AddDelete:
            gamma[proposal.flip] ^= 1;
            break;
        case Proposal::Kind::Swap:
            gamma[proposal.add] = 1;
            gamma[proposal.remove] = 0;
            break;
        case Proposal::Kind::Shift:
            gamma = shift_indicator(state.gamma, proposal.shift);
            break;
    }
    return gamma;
}
}  // namespace

void SamplerConfig::validate() const {
    if (iterations == 1) throw ConfigError("iterations must be at least 2");
    if (!(burnin_fraction > 0.0) || !(burnin_fraction < 1.0)) {
        throw ConfigError("burnin_fraction must lie in (0, 1)");
    }
    if (special_move_period < 1) throw ConfigError("special_move_period must be positive");
    if (shift_magnitude < 1) throw ConfigError("shift_magnitude must be positive");
    if (n_chains < 1) throw ConfigError("n_chains must be positive");
}

std::uint64_t SamplerConfig::resolved_iterations(std::size_t n_distinct) const {
    if (iterations != 0) return iterations;
    return 100 * (static_cast<std::uint64_t>(n_distinct) + 1);
}

PosteriorContext::PosteriorContext(const PolygonalChain& chain, const Hyperparameters& hyper)
    : chain_(&chain), hyper_(&hyper), m_(static_cast<int>(chain.size())) {
    hyper.validate();
    lgamma_half_.resize(m_ + 1);
    for (int j = 0; j <= m_; ++j) {
        lgamma_half_[j] = std::lgamma(hyper.alpha_sigma + 0.5 * j);
    }
    lik_const_ = hyper.alpha_sigma * std::log(hyper.beta_sigma) - lgamma_half_[0];

    sum_x_.assign(m_ + 1, 0.0);
    sum_y_.assign(m_ + 1, 0.0);
    sum_xx_.assign(m_ + 1, 0.0);
    sum_yy_.assign(m_ + 1, 0.0);
    sum_xy_.assign(m_ + 1, 0.0);
    for (int i = 0; i < m_; ++i) {
        const Point2 v = chain.vertices[i];
        sum_x_[i + 1] = sum_x_[i] + v.x;
        sum_y_[i + 1] = sum_y_[i] + v.y;
        sum_xx_[i + 1] = sum_xx_[i] + v.x * v.x;
        sum_yy_[i + 1] = sum_yy_[i] + v.y * v.y;
        sum_xy_[i + 1] = sum_xy_[i] + v.x * v.y;
    }
}

double PosteriorContext::range(const std::vector<double>& prefix, int from, int count) const {
    // circular sum over `count` vertices starting at index `from`
    if (count <= 0) return 0.0;
    if (from + count <= m_) return prefix[from + count] - prefix[from];
    return (prefix[m_] - prefix[from]) + prefix[from + count - m_];
}

double PosteriorContext::segment_ssq(int begin, int end) const {
    const LineCoefficients line = line_through(chain_->vertices[begin], chain_->vertices[end]);
    const double denom = line.a * line.a + line.b * line.b;
    const int from = (begin + 1) % m_;
    const int count = (end - from + m_) % m_;

    // (A x - B y + C)^2 expanded over the vertex range
    const double sx = range(sum_x_, from, count);
    const double sy = range(sum_y_, from, count);
    const double sxx = range(sum_xx_, from, count);
    const double syy = range(sum_yy_, from, count);
    const double sxy = range(sum_xy_, from, count);
    const double a = line.a, b = line.b, c = line.c;
    const double ssq = a * a * sxx + b * b * syy + c * c * count - 2.0 * a * b * sxy +
                       2.0 * a * c * sx - 2.0 * b * c * sy;
    // cancellation can leave a tiny negative residue when the segment fits
    // its chord exactly
    return std::max(ssq, 0.0) / denom;
}

double PosteriorContext::segment_log_marglik(int n_k, double ssq) const {
    const double half_nk = 0.5 * n_k;
    return -half_nk * kLog2Pi + lgamma_half_[n_k] + lik_const_ -
           (hyper_->alpha_sigma + half_nk) * std::log(hyper_->beta_sigma + 0.5 * ssq);
}

double PosteriorContext::log_prior_for_count(int k) const {
    return lasa::log_prior_for_count(k, chain_->size(), *hyper_);
}

ChainState make_state(const PosteriorContext& ctx, LandmarkIndicator gamma) {
    if (!is_valid_gamma(gamma, ctx.chain())) {
        throw ConstraintViolation("initial gamma is outside the prior support");
    }
    ChainState state;
    state.landmarks = landmark_positions(gamma);
    state.gamma = std::move(gamma);
    const int k = state.k();
    const int m = ctx.n_distinct();
    state.log_lik = 0.0;
    for (int s = 0; s < k; ++s) {
        SegmentTerm term;
        term.begin = state.landmarks[s];
        term.end = state.landmarks[(s + 1) % k];
        term.n_k = (term.end - term.begin - 1 + m) % m;
        term.ssq = ctx.segment_ssq(term.begin, term.end);
        term.log_marglik = ctx.segment_log_marglik(term.n_k, term.ssq);
        state.log_lik += term.log_marglik;
        state.segments.push_back(term);
    }
    state.log_pri = ctx.log_prior_for_count(k);
    return state;
}

void verify_state(const PosteriorContext& ctx, const ChainState& state) {
    const double fresh = log_posterior(ctx.chain(), state.gamma, ctx.hyper());
    if (std::abs(fresh - state.log_post()) > 1e-9) {
        throw InternalError("sampler cache incoherent: cached " + std::to_string(state.log_post()) +
                            " vs recomputed " + std::to_string(fresh));
    }
}

Proposal propose_add_delete(const ChainState& state, Rng& rng) {
    Proposal p;
    p.kind = Proposal::Kind::AddDelete;
    p.flip = static_cast<int>(rng.uniform_below(state.gamma.size()));
    return p;
}

Proposal propose_swap(const ChainState& state, Rng& rng) {
    const int m = static_cast<int>(state.gamma.size());
    const int k = state.k();
    Proposal p;
    p.kind = Proposal::Kind::Swap;
    p.remove = state.landmarks[rng.uniform_below(k)];
    int pick = static_cast<int>(rng.uniform_below(m - k));  // rank among non-landmarks
    for (int i = 0; i < m; ++i) {
        if (!state.gamma[i] && pick-- == 0) {
            p.add = i;
            break;
        }
    }
    return p;
}

Proposal propose_partial_shift(const ChainState& state, int shift_magnitude, Rng& rng) {
    (void)state;
    Proposal p;
    p.kind = Proposal::Kind::Shift;
    const int draw = static_cast<int>(rng.uniform_below(2 * shift_magnitude));
    p.shift = draw < shift_magnitude ? -(draw + 1) : draw - shift_magnitude + 1;
    return p;
}

bool landmark_polygon_simple(const PosteriorContext& ctx, const std::vector<int>& old_landmarks,
                             const std::vector<int>& landmarks, bool incremental) {
    const std::vector<Point2>& v = ctx.chain().vertices;
    const int k = static_cast<int>(landmarks.size());
    for (int s = 0; s < k; ++s) {
        if (v[landmarks[s]] == v[landmarks[(s + 1) % k]]) return false;  // degenerate edge
    }
    if (!incremental) {
        std::vector<Point2> poly;
        poly.reserve(k);
        for (int l : landmarks) poly.push_back(v[l]);
        return !is_self_intersecting(poly);
    }

    // The previous landmark polygon is simple, so a violation must involve
    // an edge that is not present in it. Collect those and test them
    // against every edge of the new polygon.
    const int old_k = static_cast<int>(old_landmarks.size());
    auto old_edge = [&](int a, int b) {
        const auto it = std::lower_bound(old_landmarks.begin(), old_landmarks.end(), a);
        if (it == old_landmarks.end() || *it != a) return false;
        const int s = static_cast<int>(it - old_landmarks.begin());
        return old_landmarks[(s + 1) % old_k] == b;
    };
    for (int s = 0; s < k; ++s) {
        const int a = landmarks[s];
        const int b = landmarks[(s + 1) % k];
        if (old_edge(a, b)) continue;
        const Point2 a1 = v[a];
        const Point2 a2 = v[b];
        for (int t = 0; t < k; ++t) {
            if (t == s) continue;
            const Point2 b1 = v[landmarks[t]];
            const Point2 b2 = v[landmarks[(t + 1) % k]];
            if (t == (s + 1) % k || s == (t + 1) % k) {
                // shared endpoint; reject collinear overlap beyond it
                const Point2 shared = (t == (s + 1) % k) ? a2 : a1;
                const Point2 tail_a = (t == (s + 1) % k) ? a1 : a2;
                const Point2 tail_b = (t == (s + 1) % k) ? b2 : b1;
                if (std::abs(orient(tail_a, shared, tail_b)) <= 1e-12 &&
                    dot(tail_a - shared, tail_b - shared) > 0.0) {
                    return false;
                }
            } else if (segments_intersect(a1, a2, b1, b2)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<ChainState> evaluate_proposal(const PosteriorContext& ctx, const ChainState& state,
                                            const Proposal& proposal) {
    const int m = ctx.n_distinct();
    std::vector<int> landmarks;
    if (!proposed_landmarks(state, proposal, m, landmarks)) return std::nullopt;

    const bool incremental = proposal.kind != Proposal::Kind::Shift;
    if (!landmark_polygon_simple(ctx, state.landmarks, landmarks, incremental)) {
        return std::nullopt;
    }

    ChainState next;
    next.landmarks = std::move(landmarks);
    const int k = next.k();
    next.segments.reserve(k);
    next.log_lik = 0.0;
    for (int s = 0; s < k; ++s) {
        SegmentTerm term;
        term.begin = next.landmarks[s];
        term.end = next.landmarks[(s + 1) % k];
        // Reuse the cached term when the same landmark pair bounded a
        // segment of the current state.
        const auto it = std::lower_bound(state.segments.begin(), state.segments.end(), term.begin,
                                         [](const SegmentTerm& t, int b) { return t.begin < b; });
        if (it != state.segments.end() && it->begin == term.begin && it->end == term.end) {
            term = *it;
        } else {
            term.n_k = (term.end - term.begin - 1 + m) % m;
            term.ssq = ctx.segment_ssq(term.begin, term.end);
            term.log_marglik = ctx.segment_log_marglik(term.n_k, term.ssq);
        }
        next.log_lik += term.log_marglik;
        next.segments.push_back(term);
    }
    next.log_pri = ctx.log_prior_for_count(k);
    next.gamma = apply_to_gamma(state, proposal);
    return next;
}

ChainState accept_reject(const PosteriorContext& ctx, ChainState state, const Proposal& proposal,
                         Rng& rng, MoveStats& stats) {
    ++stats.proposed;
    std::optional<ChainState> next = evaluate_proposal(ctx, state, proposal);
    if (!next) return state;  // zero prior: rejected with probability one
    const double log_ratio = next->log_post() - state.log_post() + proposal.log_proposal_ratio;
    if (log_ratio >= 0.0 || rng.uniform() < std::exp(log_ratio)) {
        ++stats.accepted;
        return std::move(*next);
    }
    return state;
}

LandmarkIndicator initial_gamma(const PosteriorContext& ctx, Rng& rng) {
    const int m = ctx.n_distinct();
    const int k0 = std::max(3, static_cast<int>(std::lround(ctx.hyper().k_hat)));
    if (2 * k0 > m) {
        throw ConfigError("chain too short for " + std::to_string(k0) + " initial landmarks");
    }
    for (int attempt = 0; attempt < kInitAttempts; ++attempt) {
        LandmarkIndicator gamma(m, 0);
        int placed = 0;
        while (placed < k0) {
            const int i = static_cast<int>(rng.uniform_below(m));
            if (!gamma[i]) {
                gamma[i] = 1;
                ++placed;
            }
        }
        if (is_valid_gamma(gamma, ctx.chain())) return gamma;
    }
    throw GenerationError("failed to draw a valid initial indicator in " +
                          std::to_string(kInitAttempts) + " attempts");
}

McmcTrace run_chain(const PolygonalChain& chain, const Hyperparameters& hyper,
                    const SamplerConfig& config, Rng& rng) {
    config.validate();
    if (!chain.normalized) {
        throw InvalidInput("run_chain expects a normalized chain");
    }
    const PosteriorContext ctx(chain, hyper);
    const std::uint64_t iterations = config.resolved_iterations(chain.size());
    if (iterations < 2) throw ConfigError("iterations must be at least 2");
    const auto keep = static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(iterations) * (1.0 - config.burnin_fraction)));
    const std::uint64_t burnin = iterations - keep;
    if (burnin < 1) throw ConfigError("burn-in must cover at least one iteration");

    McmcTrace trace;
    trace.iterations = iterations;
    trace.burnin = burnin;
    trace.seed = config.seed;
    trace.samples.reserve(keep);
    trace.log_post_trace.reserve(keep);

    ChainState state = make_state(ctx, initial_gamma(ctx, rng));
    for (std::uint64_t it = 1; it <= iterations; ++it) {
        const Proposal base = propose_add_delete(state, rng);
        state = accept_reject(ctx, std::move(state), base, rng, trace.add_delete);
        if (it % static_cast<std::uint64_t>(config.special_move_period) == 0) {
            const Proposal swap = propose_swap(state, rng);
            state = accept_reject(ctx, std::move(state), swap, rng, trace.swap);
            const Proposal shift = propose_partial_shift(state, config.shift_magnitude, rng);
            state = accept_reject(ctx, std::move(state), shift, rng, trace.shift);
        }
#ifndef NDEBUG
        if (it % 1000 == 0) verify_state(ctx, state);
#endif
        if (it > burnin) {
            trace.samples.push_back(state.gamma);
            trace.log_post_trace.push_back(state.log_post());
        }
    }
    return trace;
}

std::vector<McmcTrace> run_multi_chain(const PolygonalChain& chain, const Hyperparameters& hyper,
                                       const SamplerConfig& config) {
    config.validate();
    std::vector<std::future<McmcTrace>> futures;
    futures.reserve(config.n_chains);
    for (int c = 0; c < config.n_chains; ++c) {
        futures.push_back(std::async(std::launch::async, [&, c] {
            SamplerConfig local = config;
            local.seed = config.seed + static_cast<std::uint64_t>(c);
            Rng rng(local.seed);
            return run_chain(chain, hyper, local, rng);
        }));
    }
    std::vector<McmcTrace> traces;
    traces.reserve(config.n_chains);
    for (auto& f : futures) traces.push_back(f.get());
    return traces;
}

}  // namespace lasa
