#pragma once

#include <vector>

#include "simlearn/core/metric.hpp"
#include "simlearn/datagen/distribution.hpp"

namespace simlearn {

/// Monte Carlo estimate of how much of a distribution is "thin": a point is
/// flagged when the estimated mass of its epsilon-ball falls strictly below
/// delta.
struct RareEstimate {
    double p_hat = 0.0;               // flagged fraction of the outer draws
    std::int64_t outer = 0;           // points tested
    std::int64_t inner = 0;           // draws per ball-mass estimate
    std::vector<double> ball_mass;    // per outer draw
    std::vector<bool> rare;           // per outer draw
};

/// For each of `outer` draws x, estimates the epsilon-ball mass around x
/// with `inner` fresh draws and flags x when the estimate is strictly below
/// delta. inner = 0 selects the default ceil(50 / delta); anything below
/// ceil(10 / delta) is rejected as too noisy to act on.
/// The outer points are drawn first and each gets its own derived inner
/// stream, so rerunning with a larger `inner` keeps the same outer sample
/// and only sharpens the per-point mass estimates.
RareEstimate estimate_rare_probability(GroupDistribution& dist, const Metric& metric,
                                       double epsilon, double delta, std::int64_t outer,
                                       std::int64_t inner, Rng& rng);

}  // namespace simlearn
