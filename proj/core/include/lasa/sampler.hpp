#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lasa/geometry.hpp"
#include "lasa/indicator.hpp"
#include "lasa/posterior.hpp"
#include "lasa/rng.hpp"

namespace lasa {

struct SamplerConfig {
    // 0 means the default 100 * (m + 1) for a chain with m distinct vertices.
    std::uint64_t iterations = 0;
    double burnin_fraction = 0.5;
    int special_move_period = 20;  // swap + shift attempted every this many iterations
    int shift_magnitude = 1;
    std::uint64_t seed = 0;
    int n_chains = 4;

    void validate() const;
    std::uint64_t resolved_iterations(std::size_t n_distinct) const;
};

struct MoveStats {
    std::uint64_t proposed = 0;
    std::uint64_t accepted = 0;
};

struct McmcTrace {
    std::vector<LandmarkIndicator> samples;  // post-burn-in states
    std::vector<double> log_post_trace;      // aligned with samples
    MoveStats add_delete;
    MoveStats swap;
    MoveStats shift;
    std::uint64_t iterations = 0;
    std::uint64_t burnin = 0;
    std::uint64_t seed = 0;
};

// Immutable evaluation context for one (chain, hyperparameters) pair.
// Precomputes the lgamma terms plus circular prefix sums of x, y, x^2,
// y^2, and xy, so a segment's squared-distance sum is O(1) regardless of
// its length. Segment likelihoods depend on distances only through their
// squared magnitudes, so no inside/outside test is needed here.
class PosteriorContext {
public:
    PosteriorContext(const PolygonalChain& chain, const Hyperparameters& hyper);

    const PolygonalChain& chain() const { return *chain_; }
    const Hyperparameters& hyper() const { return *hyper_; }
    int n_distinct() const { return m_; }

    // Sum of squared line distances over the non-landmark vertices strictly
    // between landmarks `begin` and `end` (circular).
    double segment_ssq(int begin, int end) const;

    // Marginal segment log-likelihood from the vertex count and squared sum.
    double segment_log_marglik(int n_k, double ssq) const;

    double log_prior_for_count(int k) const;

private:
    const PolygonalChain* chain_;
    const Hyperparameters* hyper_;
    int m_ = 0;
    std::vector<double> lgamma_half_;  // lgamma(alpha_sigma + j/2), j = 0..m
    double lik_const_ = 0.0;           // alpha*log(beta) - lgamma(alpha)
    // prefix[i] sums vertices 0..i-1
    std::vector<double> sum_x_, sum_y_, sum_xx_, sum_yy_, sum_xy_;
    double range(const std::vector<double>& prefix, int from, int count) const;
};

struct SegmentTerm {
    int begin = 0;  // landmark opening the segment
    int end = 0;    // next landmark (circular)
    int n_k = 0;
    double ssq = 0.0;
    double log_marglik = 0.0;
};

// Sampler state with cached per-segment likelihood terms; log_post always
// equals the from-scratch posterior of gamma.
struct ChainState {
    LandmarkIndicator gamma;
    std::vector<int> landmarks;         // sorted positions of the ones
    std::vector<SegmentTerm> segments;  // segments[s] starts at landmarks[s]
    double log_lik = 0.0;
    double log_pri = 0.0;

    double log_post() const { return log_lik + log_pri; }
    int k() const { return static_cast<int>(landmarks.size()); }
};

// Full (non-incremental) evaluation; throws ConstraintViolation when gamma
// is outside the prior support.
ChainState make_state(const PosteriorContext& ctx, LandmarkIndicator gamma);

// Throws InternalError when the cached values drift from a from-scratch
// recomputation by more than 1e-9.
void verify_state(const PosteriorContext& ctx, const ChainState& state);

struct Proposal {
    enum class Kind { AddDelete, Swap, Shift };
    Kind kind = Kind::AddDelete;
    int flip = -1;    // AddDelete: entry to toggle
    int add = -1;     // Swap: non-landmark to set
    int remove = -1;  // Swap: landmark to clear
    int shift = 0;    // Shift: circular offset
    double log_proposal_ratio = 0.0;  // 0 for all three self-inverse moves
};

Proposal propose_add_delete(const ChainState& state, Rng& rng);
Proposal propose_swap(const ChainState& state, Rng& rng);
Proposal propose_partial_shift(const ChainState& state, int shift_magnitude, Rng& rng);

// Builds the proposed state, recomputing only segments whose bounding
// landmarks changed; nullopt when the proposal leaves the prior support.
std::optional<ChainState> evaluate_proposal(const PosteriorContext& ctx, const ChainState& state,
                                            const Proposal& proposal);

// Metropolis step: returns the accepted state (or `state` unchanged) and
// updates the move statistics. Invalid proposals are rejected outright.
ChainState accept_reject(const PosteriorContext& ctx, ChainState state, const Proposal& proposal,
                         Rng& rng, MoveStats& stats);

// Random initial indicator with round(k_hat) landmarks; rejection-samples
// until valid, capped at 1000 attempts.
LandmarkIndicator initial_gamma(const PosteriorContext& ctx, Rng& rng);

McmcTrace run_chain(const PolygonalChain& chain, const Hyperparameters& hyper,
                    const SamplerConfig& config, Rng& rng);

// Independent chains with seeds config.seed + chain index, run in parallel;
// traces returned in chain order.
std::vector<McmcTrace> run_multi_chain(const PolygonalChain& chain, const Hyperparameters& hyper,
                                       const SamplerConfig& config);

}  // namespace lasa
