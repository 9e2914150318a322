#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trieval/curves.hpp"
#include "trieval/simulate.hpp"
#include "trieval/trimetric.hpp"

namespace trieval {

enum class ExperimentSet { a, b, c, d };

struct ExperimentRow {
    PredictorParams params;
    double prevalence = 0.0;
};

/// Declarative description of one evaluation protocol: five predictor/dataset
/// rows scored with reps independent replications each.
struct ExperimentSpec {
    ExperimentSet set_id = ExperimentSet::a;
    std::array<ExperimentRow, 5> rows{};
    std::int64_t n = 10000;
    int reps = 10;
    std::uint64_t seed = 42;
    TriConfig tri;
    Interpolation pr_interpolation = Interpolation::linear;
};

struct Stat {
    double mean = 0.0;
    double stddev = 0.0; // sample stddev; 0 when reps == 1
};

struct RowResult {
    ExperimentRow row;
    Stat auprc;
    Stat auroc;
    Stat tri_score;
};

/// Five-row score table: mean and stddev of auprc, auroc and tri_score per
/// row, plus the ExperimentSpec that produced it.
struct MetricTable {
    ExperimentSpec spec;
    std::array<RowResult, 5> rows{};
};

/// Default row grids.
///   a: fixed P(0.1, 0.1), prevalence 5%..25%;
///   b: alpha 0.05..0.25 with beta 0.1;
///   c: beta 0.45 down to 0.25 with alpha 0.1;
///   d: alpha 0.05..0.25 with beta = 0.5 - alpha;
/// sets b-d at prevalence 0.1.
std::array<ExperimentRow, 5> grid_for_set(ExperimentSet set_id);

/// Spec with the default grid for a set and defaults everywhere else.
ExperimentSpec default_spec(ExperimentSet set_id);

/// Sub-seed for one (row, replication) cell; rows and reps are independent
/// streams so execution order cannot matter.
std::uint64_t derive_seed(std::uint64_t master, int row, int rep);

/// Runs every row and replication: generate labels and scores, sweep once,
/// compute auprc, auroc and tri_score from that sweep, aggregate mean/stddev.
/// Deterministic given the ExperimentSpec.
MetricTable run_experiment(const ExperimentSpec& spec);

enum class CurveKind { roc, pr, tri };

/// Per-row ROC or PR curve points from the first replication's data.
std::array<CurvePoints, 5> emit_curve_points(const ExperimentSpec& spec, CurveKind kind);

/// Per-row 3-dimensional metric points from the first replication's data.
std::array<std::vector<TriPoint>, 5> emit_tri_points(const ExperimentSpec& spec);

} // namespace trieval
