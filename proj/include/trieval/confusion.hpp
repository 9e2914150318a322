#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace trieval {

/// One scored instance: a predictor confidence (higher = more confidently
/// positive) paired with its gold-standard label.
struct LabeledScore {
    double score = 0.0;
    bool positive = false;
};

/// An ordered collection of labeled scores with cached class totals.
/// Construction rejects non-finite scores.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<LabeledScore> items);

    const std::vector<LabeledScore>& items() const { return items_; }
    std::int64_t size() const { return static_cast<std::int64_t>(items_.size()); }
    std::int64_t n_pos() const { return n_pos_; }
    std::int64_t n_neg() const { return n_neg_; }

    /// Fraction of gold positives. Requires a non-empty dataset.
    double prevalence() const;

private:
    std::vector<LabeledScore> items_;
    std::int64_t n_pos_ = 0;
    std::int64_t n_neg_ = 0;
};

/// 2x2 contingency counts at one decision threshold.
struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t total() const { return tp + fp + fn + tn; }
};

/// Scalar rates of a confusion matrix. Ratios that divide by zero are kept
/// explicit instead of being silently clamped: an empty optional means the
/// quantity is undefined (0/0), and a ratio with a zero denominator but a
/// positive numerator is +infinity.
struct RateBundle {
    double accuracy = 0.0;
    double sensitivity = 0.0; // alias: recall, TPR
    double specificity = 0.0;
    std::optional<double> precision;   // empty iff tp+fp == 0
    std::optional<double> tp_fp_ratio; // empty iff tp == fp == 0
    std::optional<double> fp_tn_ratio; // empty iff fp == tn == 0
};

/// Counts predictions under the rule: predict positive iff score >= threshold.
/// The inclusive comparison guarantees the top-threshold point predicts at
/// least one positive.
ConfusionMatrix confusion_at_threshold(const Dataset& data, double threshold);

/// Rates for a non-empty confusion matrix.
RateBundle rates(const ConfusionMatrix& cm);

} // namespace trieval
