#pragma once

#include <optional>
#include <vector>

#include "simlearn/analysis/trials.hpp"

namespace simlearn {

/// Bin edges with +infinity as the final right edge; counts[i] covers
/// [edges[i], edges[i+1]). `excluded` counts NaN inputs left out entirely.
struct Histogram {
    std::vector<double> edges;
    std::vector<std::int64_t> counts;
    std::int64_t excluded = 0;
};

Histogram build_histogram(const std::vector<double>& values,
                          const std::vector<double>& edges);

/// Order statistics of the non-NaN entries.
struct StatBlock {
    std::int64_t count = 0;
    std::int64_t excluded = 0;
    double mean = 0.0;
    double median = 0.0;
    double p90 = 0.0;
    double p99 = 0.0;
    double max = 0.0;
    Histogram hist;
};

struct LearnerSummary {
    StatBlock rel_err_pct;
    StatBlock abs_over_eps;
};

struct ErrorSummary {
    std::optional<LearnerSummary> simple;
    std::optional<LearnerSummary> queryopt;
};

/// Default bin edges for the two error scales.
std::vector<double> default_rel_err_edges();
std::vector<double> default_abs_over_eps_edges();

/// Nearest-rank quantile of sorted data: sorted[ceil(p * n) - 1], p in (0, 1].
double quantile_nearest_rank(const std::vector<double>& sorted, double p);

/// Aggregates trial records per learner; a learner with no finite
/// predictions anywhere is reported as absent.
ErrorSummary summarize_errors(const std::vector<TrialRecord>& records,
                              const std::vector<double>& rel_edges,
                              const std::vector<double>& abs_edges);

/// Percentage of queries saved going from `simple_count` to
/// `queryopt_count`: 100 * (s - q) / s.
double query_decrease_pct(std::int64_t simple_count, std::int64_t queryopt_count);

}  // namespace simlearn
