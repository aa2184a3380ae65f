#pragma once

#include <memory>
#include <vector>

#include "simlearn/core/element.hpp"
#include "simlearn/core/metric.hpp"
#include "simlearn/learners/tables.hpp"
#include "simlearn/oracle/oracle.hpp"

namespace simlearn {

/// Prediction together with the distances from each query point to its
/// stand-in inside the training sample. Small proxy distances are what the
/// accuracy guarantee is conditioned on.
struct Prediction {
    double value = 0.0;
    double proxy_dist_x = 0.0;
    double proxy_dist_y = 0.0;
};

/// Learner that asks the oracle for every cross-group sample pair and
/// answers test pairs by substituting each point's nearest sampled
/// neighbour. samples[g] and metrics[g] describe group g.
struct SimpleModel {
    std::vector<GroupSample> samples;
    std::vector<std::shared_ptr<const Metric>> metrics;
    QueryMode mode = QueryMode::kEager;
    CrossTables sigma;       // filled in eager mode
    Oracle* oracle = nullptr;  // consulted per prediction in lazy mode
};

/// Trains by querying all cross-group pairs (eager) or deferring every query
/// to prediction time (lazy). Samples must be non-empty, one per group in
/// group order, with matching metrics.
SimpleModel train_simple(std::vector<GroupSample> samples,
                         std::vector<std::shared_ptr<const Metric>> metrics,
                         Oracle& oracle, QueryMode mode = QueryMode::kEager);

Prediction predict_simple_detail(const SimpleModel& model, const Element& x,
                                 const Element& y);

double predict_simple(const SimpleModel& model, const Element& x, const Element& y);

}  // namespace simlearn
