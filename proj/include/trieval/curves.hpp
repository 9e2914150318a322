#pragma once

#include <cstdint>
#include <vector>

#include "trieval/confusion.hpp"

namespace trieval {

/// One entry of a threshold sweep: the counts and rates obtained when
/// predicting positive at score >= threshold.
struct SweepPoint {
    double threshold = 0.0;
    ConfusionMatrix cm;
    RateBundle rates;
};

/// Confusion matrices over all distinct score values, ordered by strictly
/// decreasing threshold. The final point is always the all-positive extreme
/// (fn = tn = 0); an all-negative point never appears.
struct Sweep {
    std::vector<SweepPoint> points;
    std::int64_t n_pos = 0;
    std::int64_t n_neg = 0;
};

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
};
using CurvePoints = std::vector<CurvePoint>;

enum class Interpolation { linear, step };

/// One sweep point per distinct score value. Ties are grouped: a threshold
/// equal to a repeated score flips every instance carrying that score at once.
/// Requires at least one positive and one negative instance.
Sweep threshold_sweep(const Dataset& data);

/// (FPR, TPR) per sweep point with an integration anchor (0,0) prepended.
/// The anchor stands in for the excluded all-negative predictor; the curve
/// always terminates at (1,1).
CurvePoints roc_curve(const Sweep& sweep);

/// Trapezoidal area under a ROC curve. The x values must be non-decreasing
/// and span [0,1] exactly.
double auroc(const CurvePoints& curve);

/// Rank-based AUROC oracle: over all (positive, negative) pairs, the fraction
/// of wins with half credit for ties. Quadratic; intended for testing.
double auroc_pairwise(const Dataset& data);

/// (recall, precision) per sweep point, reduced to the achievable upper
/// envelope (max precision per distinct recall) and anchored at recall 0 with
/// the first achieved precision.
CurvePoints pr_curve(const Sweep& sweep);

/// Area under a precision-recall curve. Linear mode integrates trapezoids
/// over recall; step mode credits each segment with the precision at its
/// higher-recall endpoint.
double auprc(const CurvePoints& curve, Interpolation interpolation = Interpolation::linear);

} // namespace trieval
