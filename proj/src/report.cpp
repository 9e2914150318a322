#include "trieval/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace trieval {

namespace {

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string fmt(const std::optional<double>& value) {
    if (!value) {
        return "undefined";
    }
    if (std::isinf(*value)) {
        return "inf";
    }
    return fmt(*value);
}

std::string fmt_hex(std::uint64_t value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

} // namespace

Report evaluate(const Dataset& data, const EvalOptions& options,
                std::uint64_t input_fingerprint) {
    Report report;
    report.n = data.size();
    report.n_pos = data.n_pos();
    report.n_neg = data.n_neg();

    const Sweep sweep = threshold_sweep(data); // rejects single-class data
    report.prevalence = data.prevalence();

    report.threshold = options.threshold.value_or(0.5);
    report.cm = confusion_at_threshold(data, report.threshold);
    report.point_rates = rates(report.cm);

    report.auroc = auroc(roc_curve(sweep));
    const CurvePoints pr = pr_curve(sweep);
    report.auprc_linear = auprc(pr, Interpolation::linear);
    report.auprc_step = auprc(pr, Interpolation::step);

    const TriReport tri = tri_evaluate(sweep, options.tri);
    report.tri_area1 = tri.area1;
    report.tri_area2 = tri.area2;
    report.tri_score = tri.score;

    report.tri_config = options.tri;
    report.pr_interpolation = options.pr_interpolation;
    report.input_fingerprint = input_fingerprint;
    return report;
}

void render_report(std::ostream& out, const Report& r) {
    out << "tool_version=" << kToolVersion << '\n';
    out << "input_fnv1a64=" << fmt_hex(r.input_fingerprint) << '\n';
    out << "n=" << r.n << '\n';
    out << "n_pos=" << r.n_pos << '\n';
    out << "n_neg=" << r.n_neg << '\n';
    out << "prevalence=" << fmt(r.prevalence) << '\n';
    out << "threshold=" << fmt(r.threshold) << '\n';
    out << "tp=" << r.cm.tp << '\n';
    out << "fp=" << r.cm.fp << '\n';
    out << "fn=" << r.cm.fn << '\n';
    out << "tn=" << r.cm.tn << '\n';
    out << "accuracy=" << fmt(r.point_rates.accuracy) << '\n';
    out << "sensitivity=" << fmt(r.point_rates.sensitivity) << '\n';
    out << "specificity=" << fmt(r.point_rates.specificity) << '\n';
    out << "precision=" << fmt(r.point_rates.precision) << '\n';
    out << "tp_fp_ratio=" << fmt(r.point_rates.tp_fp_ratio) << '\n';
    out << "fp_tn_ratio=" << fmt(r.point_rates.fp_tn_ratio) << '\n';
    out << "auroc=" << fmt(r.auroc) << '\n';
    out << "auprc_linear=" << fmt(r.auprc_linear) << '\n';
    out << "auprc_step=" << fmt(r.auprc_step) << '\n';
    out << "tri_area1=" << fmt(r.tri_area1) << '\n';
    out << "tri_area2=" << fmt(r.tri_area2) << '\n';
    out << "tri_score=" << fmt(r.tri_score) << '\n';
    out << "ratio_cap=" << fmt(r.tri_config.ratio_cap) << '\n';
    out << "ratio_mode="
        << (r.tri_config.ratio_mode == RatioMode::odds_normalized ? "odds" : "raw") << '\n';
    out << "clamp_dim2=" << (r.tri_config.clamp_dim2 ? "true" : "false") << '\n';
    out << "pr_interpolation="
        << (r.pr_interpolation == Interpolation::linear ? "linear" : "step") << '\n';
}

} // namespace trieval
