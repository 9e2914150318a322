#pragma once

#include <cstdint>
#include <vector>

#include "trieval/curves.hpp"

namespace trieval {

/// How the tp/fp ratio is scaled before capping.
///   odds_normalized: multiply by n_neg/n_pos, i.e. use TPR/FPR (the positive
///                    likelihood ratio), which makes the score independent of
///                    class prevalence.
///   raw:             use tp/fp literally.
enum class RatioMode { odds_normalized, raw };

struct TriConfig {
    double ratio_cap = 100.0;
    RatioMode ratio_mode = RatioMode::odds_normalized;
    bool clamp_dim2 = true;
};

/// One evaluated point of the 3-dimensional metric: recall, the transformed
/// tp/fp ratio g, and the false-positive penalty d2 = 1 - fp/tn.
struct TriPoint {
    double recall = 0.0;
    double g = 0.0;
    double d2 = 0.0;
};

/// Result of the 3-dimensional metric over one sweep. area1 integrates g over
/// recall, area2 integrates d2 over recall, and score is their product.
struct TriReport {
    std::vector<TriPoint> points; // ordered by non-decreasing recall
    double area1 = 0.0;
    double area2 = 0.0;
    double score = 0.0;
};

/// Maps the tp/fp ratio into [0,1]: scale per cfg.ratio_mode, cap at
/// cfg.ratio_cap, divide by the cap. fp = 0 with tp > 0 saturates to 1;
/// tp = 0 maps to 0. Below the cap the map is linear, so doubling fp exactly
/// halves the result.
double ratio_transform(std::int64_t tp, std::int64_t fp,
                       std::int64_t n_pos, std::int64_t n_neg,
                       const TriConfig& cfg = {});

/// Evaluates the 3-dimensional metric over a sweep: per-recall upper envelope
/// of (g, d2) taken independently per dimension, an anchor at recall 0
/// copying the first achieved point, then trapezoidal areas over recall.
TriReport tri_evaluate(const Sweep& sweep, const TriConfig& cfg = {});

} // namespace trieval
