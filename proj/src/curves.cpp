#include "trieval/curves.hpp"

#include <algorithm>

#include "trieval/errors.hpp"

namespace trieval {

namespace {

void require_both_classes(const Dataset& data) {
    if (data.n_pos() < 1 || data.n_neg() < 1) {
        throw InputError("dataset must contain at least one positive and one negative");
    }
}

double trapezoid(const CurvePoints& curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        area += (curve[i].x - curve[i - 1].x) * (curve[i].y + curve[i - 1].y) * 0.5;
    }
    return area;
}

} // namespace

Sweep threshold_sweep(const Dataset& data) {
    require_both_classes(data);

    std::vector<LabeledScore> sorted = data.items();
    std::sort(sorted.begin(), sorted.end(),
              [](const LabeledScore& a, const LabeledScore& b) { return a.score > b.score; });

    Sweep sweep;
    sweep.n_pos = data.n_pos();
    sweep.n_neg = data.n_neg();
    sweep.points.reserve(sorted.size());

    std::int64_t cum_pos = 0;
    std::int64_t cum_neg = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        const double threshold = sorted[i].score;
        // Tied scores flip together: consume the whole run of equal scores.
        while (i < sorted.size() && sorted[i].score == threshold) {
            (sorted[i].positive ? cum_pos : cum_neg)++;
            ++i;
        }
        ConfusionMatrix cm;
        cm.tp = cum_pos;
        cm.fp = cum_neg;
        cm.fn = sweep.n_pos - cum_pos;
        cm.tn = sweep.n_neg - cum_neg;
        sweep.points.push_back({threshold, cm, rates(cm)});
    }
    return sweep;
}

CurvePoints roc_curve(const Sweep& sweep) {
    CurvePoints curve;
    curve.reserve(sweep.points.size() + 1);
    curve.push_back({0.0, 0.0}); // anchor for the excluded all-negative extreme
    for (const auto& point : sweep.points) {
        const double fpr = static_cast<double>(point.cm.fp) / static_cast<double>(sweep.n_neg);
        const double tpr = static_cast<double>(point.cm.tp) / static_cast<double>(sweep.n_pos);
        curve.push_back({fpr, tpr});
    }
    return curve;
}

double auroc(const CurvePoints& curve) {
    if (curve.size() < 2 || curve.front().x != 0.0 || curve.back().x != 1.0) {
        throw InputError("ROC curve must span x in [0,1]");
    }
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (curve[i].x < curve[i - 1].x) {
            throw InputError("ROC curve x values must be non-decreasing");
        }
    }
    return trapezoid(curve);
}

double auroc_pairwise(const Dataset& data) {
    require_both_classes(data);

    std::vector<double> pos;
    std::vector<double> neg;
    pos.reserve(static_cast<std::size_t>(data.n_pos()));
    neg.reserve(static_cast<std::size_t>(data.n_neg()));
    for (const auto& item : data.items()) {
        (item.positive ? pos : neg).push_back(item.score);
    }

    // Twice the usual credit (2 per win, 1 per tie) keeps the tally integral.
    std::int64_t credit = 0;
    for (double p : pos) {
        for (double q : neg) {
            if (p > q) {
                credit += 2;
            } else if (p == q) {
                credit += 1;
            }
        }
    }
    return static_cast<double>(credit) /
           static_cast<double>(2 * data.n_pos() * data.n_neg());
}

CurvePoints pr_curve(const Sweep& sweep) {
    CurvePoints curve;
    if (sweep.points.empty()) {
        return curve;
    }
    curve.reserve(sweep.points.size() + 1);

    // Upper envelope: one point per distinct recall, keeping the maximum
    // precision. Equal recalls are consecutive because tp is non-decreasing
    // along the sweep, and every sweep point predicts >= 1 positive so
    // precision is always defined.
    std::size_t i = 0;
    while (i < sweep.points.size()) {
        const std::int64_t tp = sweep.points[i].cm.tp;
        const double recall = sweep.points[i].rates.sensitivity;
        double best_precision = *sweep.points[i].rates.precision;
        while (i < sweep.points.size() && sweep.points[i].cm.tp == tp) {
            best_precision = std::max(best_precision, *sweep.points[i].rates.precision);
            ++i;
        }
        curve.push_back({recall, best_precision});
    }

    // Constant extension down to recall 0 with the first achieved precision.
    if (curve.front().x > 0.0) {
        curve.insert(curve.begin(), {0.0, curve.front().y});
    }
    return curve;
}

double auprc(const CurvePoints& curve, Interpolation interpolation) {
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (curve[i].x < curve[i - 1].x) {
            throw InputError("PR curve recall values must be non-decreasing");
        }
    }
    switch (interpolation) {
    case Interpolation::linear:
        return trapezoid(curve);
    case Interpolation::step: {
        double area = 0.0;
        for (std::size_t i = 1; i < curve.size(); ++i) {
            area += (curve[i].x - curve[i - 1].x) * curve[i].y;
        }
        return area;
    }
    }
    throw ConfigError("unknown interpolation mode");
}

} // namespace trieval
