#include "trieval/simulate.hpp"

#include <cmath>

#include "trieval/errors.hpp"

namespace trieval {

namespace {

void check_params(const PredictorParams& params) {
    if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) {
        throw ConfigError("alpha must lie in [0,1]");
    }
    if (!(params.beta >= 0.0 && params.beta <= 1.0)) {
        throw ConfigError("beta must lie in [0,1]");
    }
}

} // namespace

std::int64_t positive_count(const SimConfig& cfg) {
    if (cfg.n < 2) {
        throw ConfigError("n must allow at least one instance per class");
    }
    if (!(cfg.prevalence > 0.0 && cfg.prevalence < 1.0)) {
        throw ConfigError("prevalence must lie in (0,1)");
    }
    const std::int64_t n_pos = std::llround(static_cast<double>(cfg.n) * cfg.prevalence);
    if (n_pos < 1 || cfg.n - n_pos < 1) {
        throw ConfigError("n and prevalence leave a class empty");
    }
    return n_pos;
}

std::vector<bool> gen_labels(const SimConfig& cfg) {
    const std::int64_t n_pos = positive_count(cfg);
    std::vector<bool> labels(static_cast<std::size_t>(cfg.n), false);
    for (std::int64_t i = 0; i < n_pos; ++i) {
        labels[static_cast<std::size_t>(i)] = true;
    }
    return labels;
}

Dataset gen_scores(const std::vector<bool>& labels, const PredictorParams& params,
                   std::uint64_t seed) {
    check_params(params);
    std::vector<LabeledScore> items;
    items.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        // Two counter draws per instance: one decides deterministic vs
        // uniform, one feeds the uniform.
        const double decide = rng::to_unit(rng::counter_draw(seed, 2 * i));
        const double unit = rng::to_unit(rng::counter_draw(seed, 2 * i + 1));
        double score;
        if (labels[i]) {
            score = decide < params.alpha ? 1.0 : 0.25 + 0.75 * unit;
        } else {
            score = decide < params.beta ? 0.0 : 0.75 * unit;
        }
        items.push_back({score, labels[i]});
    }
    return Dataset(std::move(items));
}

double analytic_auroc(const PredictorParams& params) {
    check_params(params);
    return 1.0 - (2.0 / 9.0) * (1.0 - params.alpha) * (1.0 - params.beta);
}

} // namespace trieval
