#pragma once

#include <string>
#include <vector>

#include "simlearn/analysis/summary.hpp"
#include "simlearn/cli/config.hpp"
#include "simlearn/ingest/split.hpp"

namespace simlearn {

/// One fully evaluated (delta, repeat) grid point.
struct DeltaOutcome {
    double delta = 0.0;
    int repeat = 0;
    std::int64_t n_per_group = 0;
    std::vector<std::int64_t> rep_counts;
    std::int64_t simple_queries = 0;    // full cross-table size (analytic)
    std::int64_t queryopt_queries = 0;  // representative-table size (analytic)
    std::int64_t simple_billed = 0;     // ledger counts actually incurred
    std::int64_t queryopt_billed = 0;
    bool simple_lazy = false;
    bool queryopt_lazy = false;
    double decrease_pct = 0.0;
    std::int64_t bound_violations = 0;
    ErrorSummary errors;
    std::vector<TrialRecord> records;
    std::string out_dir;  // subdirectory under config.out, set by run_experiment
};

struct RunResult {
    std::vector<DeltaOutcome> outcomes;  // delta-major, repeat-minor grid order
    nlohmann::ordered_json rollup;
    bool any_violation = false;
};

/// Real-mode dataset, loaded and preprocessed once per run.
struct PreparedReal {
    TableSchema schema;
    NumericMatrix standardized;
    std::vector<std::int64_t> group0_rows;
    std::vector<std::int64_t> group1_rows;
    std::int64_t dropped_rows = 0;
};

PreparedReal prepare_real(const ExperimentConfig& config);

/// Evaluates one grid point in memory. `real` is required in real mode and
/// ignored otherwise.
DeltaOutcome run_grid_point(const ExperimentConfig& config, double delta, int repeat,
                            const PreparedReal* real = nullptr);

/// Full grid: evaluates every (delta, repeat) point, writes trials.csv,
/// histograms.csv and summary.json per point plus a roll-up summary.json
/// under config.out. Identical configs produce byte-identical artifacts.
RunResult run_experiment(const ExperimentConfig& config);

/// Conditional accuracy check: among trials with both proxy distances within
/// 3 * epsilon, counts breaches of the 6 * epsilon budget for the full
/// learner and the (4 * rho + 6) * epsilon budget for the query-optimized
/// one.
std::int64_t count_bound_violations(const std::vector<TrialRecord>& records,
                                    double epsilon, double rho);

/// Distribution of the cross-group similarity itself over fresh synthetic
/// pairs; used to sanity-check the scale of epsilon before running.
struct SigmaScan {
    std::int64_t draws = 0;
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
    double frac_in_7_8 = 0.0;  // fraction of values in [7, 8)
};

SigmaScan run_sigma_scan(const ExperimentConfig& config, std::int64_t draws);

}  // namespace simlearn
