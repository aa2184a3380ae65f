#pragma once

#include "simlearn/core/metric.hpp"

namespace simlearn {

/// Exact minimum number of radius-`radius` balls centered at sample points
/// needed to cover the whole sample. Exponential-time reference baseline;
/// capped at 20 elements.
int bruteforce_set_cover_opt(const GroupSample& sample, const Metric& metric,
                             double radius);

}  // namespace simlearn
