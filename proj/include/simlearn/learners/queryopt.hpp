#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "simlearn/core/element.hpp"
#include "simlearn/core/metric.hpp"
#include "simlearn/core/params.hpp"
#include "simlearn/learners/simple.hpp"
#include "simlearn/learners/tables.hpp"
#include "simlearn/oracle/oracle.hpp"

namespace simlearn {

/// Result of clustering one group sample around representatives.
///   representatives  ascending element indices of the chosen cluster heads
///   assignment       assignment[i] = representative index element i maps to
/// Every element is assigned; a representative is assigned to itself.
struct RepSelection {
    std::vector<std::int64_t> representatives;
    std::vector<std::int64_t> assignment;
};

/// Greedy cover of `sample` by overlap clusters of radius rho * epsilon.
/// Repeatedly takes the lowest-index unassigned element x as a head, then
/// absorbs every unassigned element whose radius-(rho*epsilon) ball
/// intersects x's ball. Guarantees, with r = rho * epsilon:
///   distinct heads are more than r apart,
///   every element lies within 2r of its head.
RepSelection select_representatives(const GroupSample& sample, const Metric& metric,
                                    double epsilon, double rho);

/// select_representatives for every group, in group order.
std::vector<RepSelection> select_all_representatives(
    const std::vector<GroupSample>& samples,
    const std::vector<std::shared_ptr<const Metric>>& metrics, const Params& params);

/// Learner that only ever asks the oracle about representative pairs. Test
/// pairs are answered by the stored value for (head of nearest neighbour of
/// x, head of nearest neighbour of y).
struct RepModel {
    std::vector<GroupSample> samples;
    std::vector<std::shared_ptr<const Metric>> metrics;
    std::vector<RepSelection> selections;
    // per group: element index of a representative -> its row/col in sigma
    std::vector<std::unordered_map<std::int64_t, std::int64_t>> rep_position;
    Params params;
    QueryMode mode = QueryMode::kEager;
    CrossTables sigma;         // representative pairs only, eager mode
    Oracle* oracle = nullptr;  // consulted per prediction in lazy mode
};

/// Builds the model from an existing selection, querying all representative
/// cross pairs in eager mode. Split from selection so callers can inspect
/// representative counts (and pick a mode) without selecting twice.
RepModel assemble_queryopt(std::vector<GroupSample> samples,
                           std::vector<std::shared_ptr<const Metric>> metrics,
                           std::vector<RepSelection> selections, const Params& params,
                           Oracle& oracle, QueryMode mode);

RepModel train_queryopt(std::vector<GroupSample> samples,
                        std::vector<std::shared_ptr<const Metric>> metrics,
                        const Params& params, Oracle& oracle,
                        QueryMode mode = QueryMode::kEager);

Prediction predict_queryopt_detail(const RepModel& model, const Element& x,
                                   const Element& y);

double predict_queryopt(const RepModel& model, const Element& x, const Element& y);

/// Representative counts per group, in group order.
std::vector<std::int64_t> representative_counts(const RepModel& model);

}  // namespace simlearn
