#pragma once

#include <string>
#include <vector>

#include "simlearn/analysis/summary.hpp"
#include "simlearn/analysis/trials.hpp"

namespace simlearn {

/// Shortest exact decimal form of a double (%.17g trimmed by round-trip);
/// locale independent. NaN renders as an empty string for CSV cells.
std::string format_double(double v);

/// One row per trial, NaN cells empty. Columns:
/// trial,true_sigma,proxy_dist_x,proxy_dist_y,
/// simple_prediction,simple_rel_err_pct,simple_abs_over_eps,
/// queryopt_prediction,queryopt_rel_err_pct,queryopt_abs_over_eps
void write_trials_csv(const std::string& path, const std::vector<TrialRecord>& records);

/// One row per histogram bin across both learners and both error scales.
/// Columns: learner,scale,bin,lower,upper,count  (upper is "inf" for the
/// open-ended last bin).
void write_histograms_csv(const std::string& path, const ErrorSummary& summary);

}  // namespace simlearn
