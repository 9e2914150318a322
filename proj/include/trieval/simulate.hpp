#pragma once

#include <cstdint>
#include <vector>

#include "trieval/confusion.hpp"

namespace trieval {

/// Partial-oracle predictor parameters: with probability alpha a positive
/// instance gets the deterministic score 1.0, otherwise Uniform[0.25, 1);
/// with probability beta a negative gets 0.0, otherwise Uniform[0, 0.75).
struct PredictorParams {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Synthetic dataset shape: n instances of which round(n * prevalence) are
/// positive (exact counts, not sampled).
struct SimConfig {
    std::int64_t n = 0;
    double prevalence = 0.0;
    std::uint64_t seed = 0;
};

namespace rng {

/// splitmix64 finalizer; a bijective 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// k-th draw of the counter-based stream for `seed`; draws are independent of
/// evaluation order by construction.
inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t k) {
    return mix64(seed + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Top 53 bits mapped to [0, 1).
inline double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace rng

/// Number of positive labels implied by cfg (round-half-up).
std::int64_t positive_count(const SimConfig& cfg);

/// Exactly positive_count(cfg) positives followed by negatives.
/// Both class counts must be >= 1.
std::vector<bool> gen_labels(const SimConfig& cfg);

/// Scores every label with the partial-oracle predictor. Deterministic given
/// (labels, params, seed); the draws for instance i depend only on (seed, i).
Dataset gen_scores(const std::vector<bool>& labels, const PredictorParams& params,
                   std::uint64_t seed);

/// Closed-form AUROC of the partial-oracle predictor:
/// 1 - (2/9)(1-alpha)(1-beta). Only a non-deterministic positive vs
/// non-deterministic negative pair can invert, and Uniform[0.25,1) beats
/// Uniform[0,0.75) with probability 7/9.
double analytic_auroc(const PredictorParams& params);

} // namespace trieval
