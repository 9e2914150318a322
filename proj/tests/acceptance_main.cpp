// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "trieval/curves.hpp"
#include "trieval/experiments.hpp"
#include "trieval/simulate.hpp"
#include "trieval/trimetric.hpp"

using namespace trieval;
namespace fs = std::filesystem;

namespace {

bool verdict(int id, bool pass, const char* fmt, ...) {
    char detail[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(detail, sizeof(detail), fmt, args);
    va_end(args);
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail);
    std::fflush(stdout);
    return pass;
}

double max_abs_dev(const MetricTable& table, Stat RowResult::* stat,
                   const double (&targets)[5]) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        worst = std::max(worst, std::fabs((table.rows[i].*stat).mean - targets[i]));
    }
    return worst;
}

bool strictly_increasing(const MetricTable& table, Stat RowResult::* stat) {
    for (std::size_t i = 1; i < 5; ++i) {
        if (!((table.rows[i].*stat).mean > (table.rows[i - 1].*stat).mean)) {
            return false;
        }
    }
    return true;
}

bool strictly_decreasing(const MetricTable& table, Stat RowResult::* stat) {
    for (std::size_t i = 1; i < 5; ++i) {
        if (!((table.rows[i].*stat).mean < (table.rows[i - 1].*stat).mean)) {
            return false;
        }
    }
    return true;
}

Dataset random_tied_dataset(std::uint64_t seed, int max_size, double positive_rate) {
    const int size = 2 + static_cast<int>(rng::counter_draw(seed, 0) % (max_size - 1));
    std::vector<LabeledScore> items;
    items.reserve(size);
    for (int i = 0; i < size; ++i) {
        const std::uint64_t s = rng::counter_draw(seed, 2 * i + 1);
        const std::uint64_t l = rng::counter_draw(seed, 2 * i + 2);
        const bool positive = rng::to_unit(l) < positive_rate;
        items.push_back({static_cast<double>(s % 23) / 22.0, positive});
    }
    items[0].positive = true;
    items[items.size() - 1].positive = false;
    return Dataset(std::move(items));
}

double sweep_auroc(const Dataset& data) {
    return auroc(roc_curve(threshold_sweep(data)));
}

// criterion 3 gate: P(Uniform[0.25,1) > Uniform[0,0.75)) by 2-D midpoint
// integration, no reuse of the closed form under test.
double overlap_win_probability() {
    const int cells = 4000;
    const double u_lo = 0.25, u_hi = 1.0;
    const double v_lo = 0.0, v_hi = 0.75;
    const double du = (u_hi - u_lo) / cells;
    const double dv = (v_hi - v_lo) / cells;
    std::int64_t wins = 0;
    for (int i = 0; i < cells; ++i) {
        const double u = u_lo + (i + 0.5) * du;
        for (int j = 0; j < cells; ++j) {
            const double v = v_lo + (j + 0.5) * dv;
            if (u > v) {
                ++wins;
            }
        }
    }
    return static_cast<double>(wins) / (static_cast<double>(cells) * cells);
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TRIEVAL_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult result;
    if (!pipe) {
        return result;
    }
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path scratch_dir() {
    const fs::path dir =
        fs::temp_directory_path() / ("trieval_accept_" + std::to_string(getpid()));
    fs::create_directories(dir);
    return dir;
}

} // namespace

int main() {
    bool all = true;

    // Criteria 1-2 and the set-a half of criterion 5 share one default run.
    const MetricTable table_a = run_experiment(default_spec(ExperimentSet::a));

    {
        const double targets[5] = {0.820, 0.820, 0.820, 0.820, 0.820};
        const double dev = max_abs_dev(table_a, &RowResult::auroc, targets);
        all &= verdict(1, dev <= 0.01,
                       "set a auroc means constant: max |mean-0.820| = %.4f (tol 0.01)", dev);
    }

    {
        const double targets[5] = {0.496, 0.557, 0.614, 0.656, 0.695};
        const double dev = max_abs_dev(table_a, &RowResult::auprc, targets);
        const bool increasing = strictly_increasing(table_a, &RowResult::auprc);
        all &= verdict(2, dev <= 0.03 && increasing,
                       "set a auprc tracks prevalence: max dev = %.4f (tol 0.03), increasing = %s",
                       dev, increasing ? "yes" : "no");
    }

    {
        const double numeric = overlap_win_probability();
        const double gate_dev = std::fabs(numeric - analytic_auroc({0.0, 0.0}));
        bool grid_ok = true;
        double worst = 0.0;
        const double grid[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
        int cell = 0;
        for (double alpha : grid) {
            for (double beta : grid) {
                const SimConfig cfg{100000, 0.1, 0};
                const std::uint64_t seed = derive_seed(20250342, cell++, 0);
                const Dataset d = gen_scores(gen_labels(cfg), {alpha, beta}, seed);
                const double dev = std::fabs(sweep_auroc(d) - analytic_auroc({alpha, beta}));
                worst = std::max(worst, dev);
                grid_ok = grid_ok && dev <= 0.01;
            }
        }
        all &= verdict(3, gate_dev <= 1e-3 && grid_ok,
                       "closed-form oracle: |numeric-analytic| = %.2e at (0,0) (tol 1e-3), "
                       "5x5 grid max dev = %.4f (tol 0.01)",
                       gate_dev, worst);
    }

    // Sets b/c at n=1e5 and set d at n=1e6 pin the Monte Carlo error well
    // inside the 0.01 tolerance; the set d gap between rows 4 and 5 is only
    // 6e-4, which n=1e4 noise would swamp.
    ExperimentSpec spec_b = default_spec(ExperimentSet::b);
    spec_b.n = 100000;
    ExperimentSpec spec_c = default_spec(ExperimentSet::c);
    spec_c.n = 100000;
    ExperimentSpec spec_d = default_spec(ExperimentSet::d);
    spec_d.n = 1000000;
    const MetricTable table_b = run_experiment(spec_b);
    const MetricTable table_c = run_experiment(spec_c);
    const MetricTable table_d = run_experiment(spec_d);

    {
        const double targets_b[5] = {0.811, 0.820, 0.829, 0.840, 0.850};
        const double targets_c[5] = {0.889, 0.880, 0.870, 0.860, 0.849};
        const double targets_d[5] = {0.883, 0.880, 0.877, 0.874, 0.874};
        const double dev_b = max_abs_dev(table_b, &RowResult::auroc, targets_b);
        const double dev_c = max_abs_dev(table_c, &RowResult::auroc, targets_c);
        const double dev_d = max_abs_dev(table_d, &RowResult::auroc, targets_d);
        const double dev = std::max(dev_b, std::max(dev_c, dev_d));
        all &= verdict(4, dev <= 0.01,
                       "auroc reference columns b/c/d: max dev = %.4f (tol 0.01)", dev);
    }

    {
        double spread = 0.0;
        double lo = 1.0, hi = 0.0;
        for (const RowResult& row : table_a.rows) {
            lo = std::min(lo, row.tri_score.mean);
            hi = std::max(hi, row.tri_score.mean);
        }
        spread = hi - lo;
        const bool b_up = strictly_increasing(table_b, &RowResult::tri_score);
        const bool c_down = strictly_decreasing(table_c, &RowResult::tri_score);
        const bool d_up = strictly_increasing(table_d, &RowResult::tri_score);
        all &= verdict(5, b_up && c_down && d_up && spread <= 0.05,
                       "tri_score trends: b up = %s, c down = %s, d up = %s, "
                       "set a spread = %.4f (tol 0.05)",
                       b_up ? "yes" : "no", c_down ? "yes" : "no", d_up ? "yes" : "no",
                       spread);
    }

    {
        const bool auroc_down = strictly_decreasing(table_d, &RowResult::auroc);
        const bool tri_up = strictly_increasing(table_d, &RowResult::tri_score);
        all &= verdict(6, auroc_down && tri_up,
                       "set d disagreement: auroc strictly down = %s, tri_score strictly up = %s",
                       auroc_down ? "yes" : "no", tri_up ? "yes" : "no");
    }

    {
        double worst = 0.0;
        for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
            const Dataset d = random_tied_dataset(seed * 7919 + 13, 200, 0.5);
            worst = std::max(worst, std::fabs(sweep_auroc(d) - auroc_pairwise(d)));
        }
        all &= verdict(7, worst <= 1e-9,
                       "trapezoid vs pairwise auroc on 1000 tied datasets: max gap = %.2e "
                       "(tol 1e-9)",
                       worst);
    }

    {
        bool perfect_ok;
        {
            const Dataset d = gen_scores(gen_labels({100, 0.3, 5}), {1.0, 1.0}, 5);
            const Sweep sweep = threshold_sweep(d);
            perfect_ok = sweep_auroc(d) == 1.0 && auprc(pr_curve(sweep)) == 1.0 &&
                         auprc(pr_curve(sweep), Interpolation::step) == 1.0 &&
                         tri_evaluate(sweep).score == 1.0;
        }

        bool duplication_ok = true;
        bool negative_dup_ok = true;
        for (std::uint64_t seed = 2000; seed < 2050; ++seed) {
            const Dataset d = random_tied_dataset(seed, 80, 0.5);
            std::vector<LabeledScore> tripled;
            std::vector<LabeledScore> neg_widened = d.items();
            for (int k = 0; k < 3; ++k) {
                tripled.insert(tripled.end(), d.items().begin(), d.items().end());
            }
            for (const LabeledScore& item : d.items()) {
                if (!item.positive) {
                    for (int k = 0; k < 3; ++k) {
                        neg_widened.push_back(item);
                    }
                }
            }
            const Sweep s1 = threshold_sweep(d);
            const Sweep s3 = threshold_sweep(Dataset(std::move(tripled)));
            const Sweep sn = threshold_sweep(Dataset(std::move(neg_widened)));
            duplication_ok = duplication_ok &&
                             auroc(roc_curve(s1)) == auroc(roc_curve(s3)) &&
                             auprc(pr_curve(s1)) == auprc(pr_curve(s3)) &&
                             auprc(pr_curve(s1), Interpolation::step) ==
                                 auprc(pr_curve(s3), Interpolation::step) &&
                             tri_evaluate(s1).score == tri_evaluate(s3).score;
            negative_dup_ok =
                negative_dup_ok && tri_evaluate(s1).score == tri_evaluate(sn).score;
        }

        bool halving_ok = true;
        for (std::int64_t tp = 1; tp <= 30 && halving_ok; ++tp) {
            for (std::int64_t fp = 1; fp <= 20; ++fp) {
                const double r1 = ratio_transform(tp, fp, 40, 40);
                const double r2 = ratio_transform(tp, 2 * fp, 40, 40);
                if (r1 < 1.0 && r1 != 2.0 * r2) {
                    halving_ok = false;
                    break;
                }
            }
        }

        // Positive counts stay small enough that the algebraic identity holds
        // at the stated absolute tolerance.
        bool ratio_identity_ok = true;
        double ratio_dev = 0.0;
        for (std::uint64_t seed = 3000; seed < 3050; ++seed) {
            const Dataset d = random_tied_dataset(seed, 200, 0.25);
            if (d.n_pos() > 80) {
                continue;
            }
            for (const SweepPoint& p : threshold_sweep(d).points) {
                if (!p.rates.precision || !p.rates.tp_fp_ratio) {
                    continue;
                }
                const double prec = *p.rates.precision;
                if (prec >= 1.0) {
                    continue;
                }
                const double dev =
                    std::fabs(*p.rates.tp_fp_ratio - prec / (1.0 - prec));
                ratio_dev = std::max(ratio_dev, dev);
                ratio_identity_ok = ratio_identity_ok && dev <= 1e-12;
            }
        }

        all &= verdict(8,
                       perfect_ok && duplication_ok && negative_dup_ok && halving_ok &&
                           ratio_identity_ok,
                       "exact invariants: perfect = %s, x3 duplication = %s, negative-only "
                       "duplication = %s, halving = %s, ratio identity max dev = %.2e (tol 1e-12)",
                       perfect_ok ? "yes" : "no", duplication_ok ? "yes" : "no",
                       negative_dup_ok ? "yes" : "no", halving_ok ? "yes" : "no", ratio_dev);
    }

    {
        const fs::path dir = scratch_dir();
        const std::string sim_flags = "simulate --alpha 0.2 --beta 0.2 --n 400 --prevalence 0.25 --seed 11";
        const RunResult sim1 = run_cli(sim_flags);
        const RunResult sim2 = run_cli(sim_flags);
        const fs::path sim_file = dir / "sim.csv";
        {
            std::ofstream out(sim_file, std::ios::binary);
            out << sim1.output;
        }
        const RunResult eval = run_cli("eval " + sim_file.string());

        const fs::path bad_file = dir / "bad.csv";
        {
            std::ofstream out(bad_file, std::ios::binary);
            out << "score,label\n0.9,1\n0.8,oops\n";
        }
        const fs::path one_class = dir / "one_class.csv";
        {
            std::ofstream out(one_class, std::ios::binary);
            out << "score,label\n0.9,1\n0.8,1\n";
        }
        const fs::path blocker = dir / "blocker";
        {
            std::ofstream out(blocker, std::ios::binary);
            out << "file\n";
        }

        const bool round_trip = sim1.exit_code == 0 && eval.exit_code == 0;
        const bool reproducible = sim1.output == sim2.output;
        const bool code2 = run_cli("eval " + bad_file.string()).exit_code == 2;
        const bool code3 = run_cli("eval " + one_class.string()).exit_code == 3;
        const bool code64 = run_cli("eval --no-such-flag x").exit_code == 64;
        const bool code66 = run_cli("eval " + (dir / "missing.csv").string()).exit_code == 66;
        const bool code73 =
            run_cli("experiment --set a --n 50 --reps 1 --out-dir " +
                    (blocker / "sub").string())
                .exit_code == 73;

        all &= verdict(9,
                       round_trip && reproducible && code2 && code3 && code64 && code66 &&
                           code73,
                       "cli contract: round trip = %s, byte-identical rerun = %s, exit codes "
                       "2/3/64/66/73 = %s/%s/%s/%s/%s",
                       round_trip ? "yes" : "no", reproducible ? "yes" : "no",
                       code2 ? "yes" : "no", code3 ? "yes" : "no", code64 ? "yes" : "no",
                       code66 ? "yes" : "no", code73 ? "yes" : "no");
    }

    return all ? 0 : 1;
}
