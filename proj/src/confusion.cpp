#include "trieval/confusion.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "trieval/errors.hpp"

namespace trieval {

Dataset::Dataset(std::vector<LabeledScore> items) : items_(std::move(items)) {
    for (const auto& item : items_) {
        if (!std::isfinite(item.score)) {
            throw InputError("dataset contains a non-finite score");
        }
        (item.positive ? n_pos_ : n_neg_)++;
    }
}

double Dataset::prevalence() const {
    if (items_.empty()) {
        throw InputError("prevalence of an empty dataset");
    }
    return static_cast<double>(n_pos_) / static_cast<double>(size());
}

ConfusionMatrix confusion_at_threshold(const Dataset& data, double threshold) {
    if (data.size() == 0) {
        throw InputError("cannot evaluate an empty dataset");
    }
    if (!std::isfinite(threshold)) {
        throw InputError("threshold must be finite");
    }
    ConfusionMatrix cm;
    for (const auto& item : data.items()) {
        const bool predicted_positive = item.score >= threshold;
        if (item.positive) {
            (predicted_positive ? cm.tp : cm.fn)++;
        } else {
            (predicted_positive ? cm.fp : cm.tn)++;
        }
    }
    return cm;
}

RateBundle rates(const ConfusionMatrix& cm) {
    if (cm.tp < 0 || cm.fp < 0 || cm.fn < 0 || cm.tn < 0) {
        throw InputError("confusion counts must be non-negative");
    }
    if (cm.total() == 0) {
        throw InputError("rates of an all-zero confusion matrix");
    }
    const auto tp = static_cast<double>(cm.tp);
    const auto fp = static_cast<double>(cm.fp);
    const auto fn = static_cast<double>(cm.fn);
    const auto tn = static_cast<double>(cm.tn);

    RateBundle out;
    out.accuracy = (tp + tn) / static_cast<double>(cm.total());
    out.sensitivity = cm.tp + cm.fn > 0 ? tp / (tp + fn) : 0.0;
    out.specificity = cm.fp + cm.tn > 0 ? tn / (fp + tn) : 0.0;

    if (cm.tp + cm.fp > 0) {
        out.precision = tp / (tp + fp);
    }
    if (cm.tp > 0 || cm.fp > 0) {
        out.tp_fp_ratio = cm.fp == 0 ? std::numeric_limits<double>::infinity()
                                     : tp / fp;
    }
    if (cm.fp > 0 || cm.tn > 0) {
        out.fp_tn_ratio = cm.tn == 0 ? std::numeric_limits<double>::infinity()
                                     : fp / tn;
    }
    return out;
}

} // namespace trieval
