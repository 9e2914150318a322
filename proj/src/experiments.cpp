#include "trieval/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "trieval/errors.hpp"

namespace trieval {

std::array<ExperimentRow, 5> grid_for_set(ExperimentSet set_id) {
    switch (set_id) {
    case ExperimentSet::a:
        return {{{{0.10, 0.10}, 0.05},
                 {{0.10, 0.10}, 0.10},
                 {{0.10, 0.10}, 0.15},
                 {{0.10, 0.10}, 0.20},
                 {{0.10, 0.10}, 0.25}}};
    case ExperimentSet::b:
        return {{{{0.05, 0.10}, 0.10},
                 {{0.10, 0.10}, 0.10},
                 {{0.15, 0.10}, 0.10},
                 {{0.20, 0.10}, 0.10},
                 {{0.25, 0.10}, 0.10}}};
    case ExperimentSet::c:
        return {{{{0.10, 0.45}, 0.10},
                 {{0.10, 0.40}, 0.10},
                 {{0.10, 0.35}, 0.10},
                 {{0.10, 0.30}, 0.10},
                 {{0.10, 0.25}, 0.10}}};
    case ExperimentSet::d:
        return {{{{0.05, 0.45}, 0.10},
                 {{0.10, 0.40}, 0.10},
                 {{0.15, 0.35}, 0.10},
                 {{0.20, 0.30}, 0.10},
                 {{0.25, 0.25}, 0.10}}};
    }
    throw ConfigError("unknown experiment set");
}

ExperimentSpec default_spec(ExperimentSet set_id) {
    ExperimentSpec spec;
    spec.set_id = set_id;
    spec.rows = grid_for_set(set_id);
    return spec;
}

std::uint64_t derive_seed(std::uint64_t master, int row, int rep) {
    std::uint64_t s = master;
    s = rng::mix64(s ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(row + 1)));
    s = rng::mix64(s ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(rep + 1)));
    return s;
}

namespace {

struct CellMetrics {
    double auprc = 0.0;
    double auroc = 0.0;
    double tri_score = 0.0;
};

Sweep sweep_for_cell(const ExperimentSpec& spec, int row, int rep) {
    const ExperimentRow& r = spec.rows[static_cast<std::size_t>(row)];
    const std::uint64_t sub_seed = derive_seed(spec.seed, row, rep);
    const SimConfig cfg{spec.n, r.prevalence, sub_seed};
    const Dataset data = gen_scores(gen_labels(cfg), r.params, sub_seed);
    return threshold_sweep(data);
}

CellMetrics evaluate_cell(const ExperimentSpec& spec, int row, int rep) {
    const Sweep sweep = sweep_for_cell(spec, row, rep);
    CellMetrics out;
    out.auprc = auprc(pr_curve(sweep), spec.pr_interpolation);
    out.auroc = auroc(roc_curve(sweep));
    out.tri_score = tri_evaluate(sweep, spec.tri).score;
    return out;
}

Stat aggregate(const std::vector<double>& values) {
    Stat stat;
    for (double v : values) {
        stat.mean += v;
    }
    stat.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - stat.mean) * (v - stat.mean);
        }
        stat.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return stat;
}

void check_finite(const Stat& stat) {
    if (!std::isfinite(stat.mean) || !std::isfinite(stat.stddev)) {
        throw std::logic_error("experiment produced a non-finite statistic");
    }
}

} // namespace

MetricTable run_experiment(const ExperimentSpec& spec) {
    if (spec.reps < 1) {
        throw ConfigError("reps must be >= 1");
    }
    MetricTable table;
    table.spec = spec;
    for (int row = 0; row < 5; ++row) {
        std::vector<double> auprcs, aurocs, tris;
        auprcs.reserve(static_cast<std::size_t>(spec.reps));
        aurocs.reserve(static_cast<std::size_t>(spec.reps));
        tris.reserve(static_cast<std::size_t>(spec.reps));
        for (int rep = 0; rep < spec.reps; ++rep) {
            const CellMetrics m = evaluate_cell(spec, row, rep);
            auprcs.push_back(m.auprc);
            aurocs.push_back(m.auroc);
            tris.push_back(m.tri_score);
        }
        RowResult& result = table.rows[static_cast<std::size_t>(row)];
        result.row = spec.rows[static_cast<std::size_t>(row)];
        result.auprc = aggregate(auprcs);
        result.auroc = aggregate(aurocs);
        result.tri_score = aggregate(tris);
        check_finite(result.auprc);
        check_finite(result.auroc);
        check_finite(result.tri_score);
    }
    return table;
}

std::array<CurvePoints, 5> emit_curve_points(const ExperimentSpec& spec, CurveKind kind) {
    if (kind == CurveKind::tri) {
        throw ConfigError("tri points carry three columns; use emit_tri_points");
    }
    std::array<CurvePoints, 5> series;
    for (int row = 0; row < 5; ++row) {
        const Sweep sweep = sweep_for_cell(spec, row, 0);
        series[static_cast<std::size_t>(row)] =
            kind == CurveKind::roc ? roc_curve(sweep) : pr_curve(sweep);
    }
    return series;
}

std::array<std::vector<TriPoint>, 5> emit_tri_points(const ExperimentSpec& spec) {
    std::array<std::vector<TriPoint>, 5> series;
    for (int row = 0; row < 5; ++row) {
        const Sweep sweep = sweep_for_cell(spec, row, 0);
        series[static_cast<std::size_t>(row)] = tri_evaluate(sweep, spec.tri).points;
    }
    return series;
}

} // namespace trieval
