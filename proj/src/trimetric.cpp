#include "trieval/trimetric.hpp"

#include <algorithm>
#include <limits>

#include "trieval/errors.hpp"

namespace trieval {

namespace {

void check_config(const TriConfig& cfg) {
    if (!(cfg.ratio_cap > 0.0)) {
        throw ConfigError("ratio_cap must be positive");
    }
}

// Dimension 2. fp = 0 is a clean prediction regardless of tn; tn = 0 with
// fp > 0 (the all-positive extreme) bottoms out at 0 so no infinity can leak
// into a report. Only the finite case responds to clamp_dim2.
double dim2(std::int64_t fp, std::int64_t tn, bool clamp) {
    if (fp == 0) {
        return 1.0;
    }
    if (tn == 0) {
        return 0.0;
    }
    const double value = 1.0 - static_cast<double>(fp) / static_cast<double>(tn);
    return clamp ? std::max(0.0, value) : value;
}

} // namespace

double ratio_transform(std::int64_t tp, std::int64_t fp,
                       std::int64_t n_pos, std::int64_t n_neg,
                       const TriConfig& cfg) {
    check_config(cfg);
    if (n_pos < 1 || n_neg < 1) {
        throw InputError("ratio_transform requires n_pos >= 1 and n_neg >= 1");
    }
    if (tp < 0 || fp < 0 || tp > n_pos || fp > n_neg) {
        throw InputError("counts out of range for the dataset totals");
    }
    if (tp == 0) {
        return 0.0;
    }
    if (fp == 0) {
        return 1.0; // ratio is +infinity; saturates past any cap
    }
    // Single division of integer-exact products keeps the value invariant
    // under instance duplication.
    const double scaled =
        cfg.ratio_mode == RatioMode::odds_normalized
            ? static_cast<double>(tp * n_neg) / static_cast<double>(fp * n_pos)
            : static_cast<double>(tp) / static_cast<double>(fp);
    return std::min(scaled, cfg.ratio_cap) / cfg.ratio_cap;
}

TriReport tri_evaluate(const Sweep& sweep, const TriConfig& cfg) {
    check_config(cfg);
    if (sweep.points.empty() || sweep.n_pos < 1 || sweep.n_neg < 1) {
        throw InputError("tri_evaluate requires a non-empty sweep over both classes");
    }

    TriReport report;
    report.points.reserve(sweep.points.size() + 1);

    // Per-recall upper envelope, each dimension maximized independently.
    // Equal recalls are consecutive: tp is non-decreasing along the sweep.
    std::size_t i = 0;
    while (i < sweep.points.size()) {
        const std::int64_t tp = sweep.points[i].cm.tp;
        const double recall = sweep.points[i].rates.sensitivity;
        double g = 0.0;
        double d2 = cfg.clamp_dim2 ? 0.0 : -std::numeric_limits<double>::max();
        while (i < sweep.points.size() && sweep.points[i].cm.tp == tp) {
            const auto& cm = sweep.points[i].cm;
            g = std::max(g, ratio_transform(cm.tp, cm.fp, sweep.n_pos, sweep.n_neg, cfg));
            d2 = std::max(d2, dim2(cm.fp, cm.tn, cfg.clamp_dim2));
            ++i;
        }
        report.points.push_back({recall, g, d2});
    }

    if (report.points.front().recall > 0.0) {
        const TriPoint& first = report.points.front();
        report.points.insert(report.points.begin(), {0.0, first.g, first.d2});
    }

    for (std::size_t k = 1; k < report.points.size(); ++k) {
        const TriPoint& a = report.points[k - 1];
        const TriPoint& b = report.points[k];
        const double width = b.recall - a.recall;
        report.area1 += width * (a.g + b.g) * 0.5;
        report.area2 += width * (a.d2 + b.d2) * 0.5;
    }
    report.score = report.area1 * report.area2;
    return report;
}

} // namespace trieval
