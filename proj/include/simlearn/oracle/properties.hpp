#pragma once

#include <functional>
#include <vector>

#include "simlearn/core/element.hpp"
#include "simlearn/core/metric.hpp"

namespace simlearn {

/// Endpoint pair (x, y) from two distinct groups plus a detour point z drawn
/// from either endpoint's group.
struct CrossTriple {
    Element x;
    Element z;
    Element y;
};

struct PropertyReport {
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    double worst_slack = 0.0;  // min over triples of (detour sum - direct); < 0 is bad
};

/// Checks the one-sided triangle property of a cross-group similarity: the
/// direct value sigma(x, y) never exceeds a detour through z by more than
/// `tolerance`, where the detour uses the intra-group metric on z's side:
///   z in x's group:  sigma(x, y) <= d_first(x, z) + sigma(z, y)
///   z in y's group:  sigma(x, y) <= sigma(x, z) + d_second(z, y)
/// Triples whose z lies in neither endpoint group are rejected.
PropertyReport verify_cross_metric_properties(
    const Metric& d_first, const Metric& d_second,
    const std::function<double(const Element&, const Element&)>& sigma,
    const std::vector<CrossTriple>& triples, double tolerance);

}  // namespace simlearn
