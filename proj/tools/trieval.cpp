#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "trieval/errors.hpp"
#include "trieval/experiments.hpp"
#include "trieval/report.hpp"
#include "trieval/score_file.hpp"
#include "trieval/simulate.hpp"

namespace {

namespace fs = std::filesystem;
using namespace trieval;

// Exit codes (sysexits-flavored, stable contract):
//   0 ok, 2 parse error, 3 degenerate data, 64 usage, 66 unreadable input,
//   73 output I/O error, 70 internal.
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitCantWrite = 73;
constexpr int kExitInternal = 70;

std::string fmt9(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

struct TriFlags {
    double ratio_cap = 100.0;
    std::string ratio_mode = "odds";

    TriConfig to_config() const {
        TriConfig cfg;
        cfg.ratio_cap = ratio_cap;
        cfg.ratio_mode = ratio_mode == "raw" ? RatioMode::raw : RatioMode::odds_normalized;
        return cfg;
    }
};

void add_tri_flags(CLI::App* cmd, TriFlags& flags) {
    cmd->add_option("--ratio-cap", flags.ratio_cap,
                    "Saturation cap of the tp/fp ratio transform")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--ratio-mode", flags.ratio_mode,
                    "odds: scale tp/fp by n_neg/n_pos (prevalence-free); raw: use tp/fp as is")
        ->check(CLI::IsMember({"odds", "raw"}))
        ->capture_default_str();
}

Interpolation to_interpolation(const std::string& name) {
    return name == "step" ? Interpolation::step : Interpolation::linear;
}

// Reads the whole file so the report can fingerprint exactly what was parsed.
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int cmd_eval(const std::string& path, const std::optional<double>& threshold,
             const TriFlags& tri, const std::string& pr_interpolation) {
    const std::string bytes = slurp(path);
    std::istringstream in(bytes);
    const Dataset data = parse_score_file(in);

    EvalOptions options;
    options.threshold = threshold;
    options.tri = tri.to_config();
    options.pr_interpolation = to_interpolation(pr_interpolation);
    const Report report = evaluate(data, options, fnv1a64(bytes));
    render_report(std::cout, report);
    return 0;
}

int cmd_curve(const std::string& path, const std::string& kind, const TriFlags& tri) {
    const std::string bytes = slurp(path);
    std::istringstream in(bytes);
    const Dataset data = parse_score_file(in);
    const Sweep sweep = threshold_sweep(data);

    if (kind == "tri") {
        std::cout << "recall,g,d2\n";
        for (const TriPoint& p : tri_evaluate(sweep, tri.to_config()).points) {
            std::cout << fmt9(p.recall) << ',' << fmt9(p.g) << ',' << fmt9(p.d2) << '\n';
        }
    } else {
        const CurvePoints curve = kind == "roc" ? roc_curve(sweep) : pr_curve(sweep);
        std::cout << "x,y\n";
        for (const CurvePoint& p : curve) {
            std::cout << fmt9(p.x) << ',' << fmt9(p.y) << '\n';
        }
    }
    return 0;
}

int cmd_simulate(double alpha, double beta, std::int64_t n, double prevalence,
                 std::uint64_t seed) {
    const SimConfig cfg{n, prevalence, seed};
    const Dataset data = gen_scores(gen_labels(cfg), {alpha, beta}, seed);
    write_score_file(std::cout, data);
    return 0;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void write_stat_table(std::ostream& out, const MetricTable& table,
                      Stat RowResult::* stat) {
    out << "row,alpha,beta,prevalence,mean,std\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const RowResult& row = table.rows[i];
        const Stat& s = row.*stat;
        out << (i + 1) << ',' << fmt9(row.row.params.alpha) << ','
            << fmt9(row.row.params.beta) << ',' << fmt9(row.row.prevalence) << ','
            << fmt9(s.mean) << ',' << fmt9(s.stddev) << '\n';
    }
}

int cmd_experiment(const std::string& set_name, std::int64_t n, int reps,
                   std::uint64_t seed, const TriFlags& tri,
                   const std::string& pr_interpolation, const std::string& out_dir,
                   bool emit_curves) {
    ExperimentSpec spec = default_spec(
        set_name == "a" ? ExperimentSet::a
        : set_name == "b" ? ExperimentSet::b
        : set_name == "c" ? ExperimentSet::c
                          : ExperimentSet::d);
    spec.n = n;
    spec.reps = reps;
    spec.seed = seed;
    spec.tri = tri.to_config();
    spec.pr_interpolation = to_interpolation(pr_interpolation);

    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory '" + out_dir + "'");
    }

    const MetricTable table = run_experiment(spec);
    const std::string prefix = "set_" + set_name + "_";
    {
        auto out = open_output(dir / (prefix + "auprc.csv"));
        write_stat_table(out, table, &RowResult::auprc);
    }
    {
        auto out = open_output(dir / (prefix + "auroc.csv"));
        write_stat_table(out, table, &RowResult::auroc);
    }
    {
        auto out = open_output(dir / (prefix + "tri_score.csv"));
        write_stat_table(out, table, &RowResult::tri_score);
    }
    write_stat_table(std::cout, table, &RowResult::tri_score);

    if (emit_curves) {
        for (CurveKind kind : {CurveKind::roc, CurveKind::pr}) {
            const auto series = emit_curve_points(spec, kind);
            const char* name = kind == CurveKind::roc ? "roc" : "pr";
            for (std::size_t i = 0; i < series.size(); ++i) {
                auto out = open_output(
                    dir / (prefix + name + "_row" + std::to_string(i + 1) + ".csv"));
                out << "x,y\n";
                for (const CurvePoint& p : series[i]) {
                    out << fmt9(p.x) << ',' << fmt9(p.y) << '\n';
                }
            }
        }
        const auto tri_series = emit_tri_points(spec);
        for (std::size_t i = 0; i < tri_series.size(); ++i) {
            auto out = open_output(
                dir / (prefix + "tri_row" + std::to_string(i + 1) + ".csv"));
            out << "recall,g,d2\n";
            for (const TriPoint& p : tri_series[i]) {
                out << fmt9(p.recall) << ',' << fmt9(p.g) << ',' << fmt9(p.d2) << '\n';
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary classifier evaluation: ROC/AUROC, precision-recall, and a "
                 "3-dimensional tp/fp-ratio metric, with a partial-oracle predictor "
                 "simulator and experiment tables"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate a score file and print a report");
    std::string eval_file;
    std::optional<double> eval_threshold;
    TriFlags eval_tri;
    std::string eval_pr = "linear";
    eval->add_option("file", eval_file, "Input score file (score,label CSV)")->required();
    eval->add_option("--threshold", eval_threshold,
                     "Decision threshold for the point metrics (default 0.5)");
    add_tri_flags(eval, eval_tri);
    eval->add_option("--pr-interpolation", eval_pr, "PR area integration rule")
        ->check(CLI::IsMember({"linear", "step"}))
        ->capture_default_str();

    // curve
    auto* curve = app.add_subcommand("curve", "Emit curve points as CSV");
    std::string curve_file;
    std::string curve_kind;
    TriFlags curve_tri;
    curve->add_option("file", curve_file, "Input score file (score,label CSV)")->required();
    curve->add_option("--kind", curve_kind, "Curve to emit")
        ->check(CLI::IsMember({"roc", "pr", "tri"}))
        ->required();
    add_tri_flags(curve, curve_tri);

    // simulate
    auto* simulate = app.add_subcommand(
        "simulate", "Generate a score file with the partial-oracle predictor");
    double sim_alpha = 0.1;
    double sim_beta = 0.1;
    std::int64_t sim_n = 10000;
    double sim_prevalence = 0.1;
    std::uint64_t sim_seed = 42;
    simulate->add_option("--alpha", sim_alpha, "Deterministic-score probability for positives")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    simulate->add_option("--beta", sim_beta, "Deterministic-score probability for negatives")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    simulate->add_option("--n", sim_n, "Sample size")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40))
        ->capture_default_str();
    simulate->add_option("--prevalence", sim_prevalence, "Fraction of positives, in (0,1)")
        ->capture_default_str();
    simulate->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();

    // experiment
    auto* experiment = app.add_subcommand(
        "experiment", "Run one of the predefined evaluation sets and write score tables");
    std::string exp_set;
    std::int64_t exp_n = 10000;
    int exp_reps = 10;
    std::uint64_t exp_seed = 42;
    TriFlags exp_tri;
    std::string exp_pr = "linear";
    std::string exp_out_dir;
    bool exp_emit_curves = false;
    experiment->add_option("--set", exp_set, "Evaluation set")
        ->check(CLI::IsMember({"a", "b", "c", "d"}))
        ->required();
    experiment->add_option("--n", exp_n, "Sample size per replication")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40))
        ->capture_default_str();
    experiment->add_option("--reps", exp_reps, "Replications per row")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    experiment->add_option("--seed", exp_seed, "Master seed")->capture_default_str();
    add_tri_flags(experiment, exp_tri);
    experiment->add_option("--pr-interpolation", exp_pr, "PR area integration rule")
        ->check(CLI::IsMember({"linear", "step"}))
        ->capture_default_str();
    experiment->add_option("--out-dir", exp_out_dir, "Directory for the CSV tables")
        ->required();
    experiment->add_flag("--emit-curves", exp_emit_curves,
                         "Also write per-row roc/pr/tri point files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(eval)) {
            return cmd_eval(eval_file, eval_threshold, eval_tri, eval_pr);
        }
        if (app.got_subcommand(curve)) {
            return cmd_curve(curve_file, curve_kind, curve_tri);
        }
        if (app.got_subcommand(simulate)) {
            return cmd_simulate(sim_alpha, sim_beta, sim_n, sim_prevalence, sim_seed);
        }
        return cmd_experiment(exp_set, exp_n, exp_reps, exp_seed, exp_tri, exp_pr,
                              exp_out_dir, exp_emit_curves);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool reading = std::string(e.what()).find("for reading") != std::string::npos;
        return reading ? kExitNoInput : kExitCantWrite;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
