#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "trieval/confusion.hpp"
#include "trieval/curves.hpp"
#include "trieval/trimetric.hpp"

namespace trieval {

inline constexpr const char* kToolVersion = "0.1.0";

struct EvalOptions {
    std::optional<double> threshold; // default 0.5 when unset
    TriConfig tri;
    Interpolation pr_interpolation = Interpolation::linear;
};

/// Full evaluation of one dataset: summary, point metrics at one threshold,
/// curve areas, the 3-dimensional metric, and enough config echo to reproduce
/// the run exactly.
struct Report {
    std::int64_t n = 0;
    std::int64_t n_pos = 0;
    std::int64_t n_neg = 0;
    double prevalence = 0.0;

    double threshold = 0.5;
    ConfusionMatrix cm;
    RateBundle point_rates;

    double auroc = 0.0;
    double auprc_linear = 0.0;
    double auprc_step = 0.0;

    double tri_area1 = 0.0;
    double tri_area2 = 0.0;
    double tri_score = 0.0;

    TriConfig tri_config;
    Interpolation pr_interpolation = Interpolation::linear;
    std::uint64_t input_fingerprint = 0;
};

/// Requires a dataset with both classes present.
Report evaluate(const Dataset& data, const EvalOptions& options,
                std::uint64_t input_fingerprint);

/// key=value lines, one per field; undefined ratios print as "undefined" and
/// saturated ones as "inf".
void render_report(std::ostream& out, const Report& report);

} // namespace trieval
