#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "simlearn/datagen/distribution.hpp"
#include "simlearn/learners/queryopt.hpp"
#include "simlearn/learners/simple.hpp"

namespace simlearn {

/// One evaluated test pair. Prediction and error fields for a learner that
/// was not run are NaN; relative error is NaN when the true value is too
/// close to zero to divide by.
struct TrialRecord {
    double true_sigma = 0.0;
    double proxy_dist_x = 0.0;
    double proxy_dist_y = 0.0;
    double simple_prediction = 0.0;
    double simple_rel_err_pct = 0.0;
    double simple_abs_over_eps = 0.0;
    double queryopt_prediction = 0.0;
    double queryopt_rel_err_pct = 0.0;
    double queryopt_abs_over_eps = 0.0;
};

/// Produces the next fresh cross-group test pair; throws ExhaustedError when
/// it cannot.
using PairSource = std::function<std::pair<Element, Element>()>;

/// PairSource drawing independently from two group distributions. The
/// distributions must outlive the source; the rng is owned by value.
PairSource make_distribution_pair_source(std::shared_ptr<GroupDistribution> a,
                                         std::shared_ptr<GroupDistribution> b, Rng rng);

/// Scores `n_trials` fresh pairs against the unbilled true similarity.
/// At least one model is required; pass nullptr for the other. Relative
/// error is 100*|pred - true|/true (NaN when true < 1e-12), absolute error
/// is |pred - true|/epsilon. Source exhaustion is reported with the number
/// of completed trials.
std::vector<TrialRecord> run_trials(const SimpleModel* simple, const RepModel* queryopt,
                                    const Oracle& oracle, const PairSource& next_pair,
                                    std::int64_t n_trials, double epsilon);

}  // namespace simlearn
