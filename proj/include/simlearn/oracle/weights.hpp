#pragma once

#include <map>
#include <utility>
#include <vector>

#include "simlearn/core/element.hpp"
#include "simlearn/core/metric.hpp"
#include "simlearn/core/rng.hpp"

namespace simlearn {

/// Group pair with the lower id first; keys cross-group tables.
using GroupPair = std::pair<int, int>;

/// Canonical (lo, hi) ordering of two distinct group ids.
GroupPair make_group_pair(int a, int b);

/// Full description of a ground-truth similarity structure: one weighted
/// intra-group metric per group (alpha weights) plus one weighted cross-group
/// similarity per group pair (beta weights). Constraining each beta weight by
/// the smaller of the two alpha weights in that coordinate makes both
/// one-sided triangle chains through either group hold.
struct OracleSpec {
    std::vector<std::vector<double>> alpha;         // alpha[g] = group g weights
    std::map<GroupPair, std::vector<double>> beta;  // beta[(l, l')] cross weights

    void validate() const;

    const std::vector<double>& alpha_for(int group) const;
    const std::vector<double>& beta_for(int group_a, int group_b) const;

    WeightedEuclideanMetric intra_metric(int group) const;
};

/// Fresh spec with alpha ~ U[0,1] per coordinate and beta ~ U[0, min over the
/// pair's alphas] per coordinate. Draw order: all alphas group by group, then
/// betas in (lo, hi) lexicographic order.
OracleSpec draw_weights(int dim, int gamma, Rng& rng);

/// Weighted Euclidean similarity between two elements of different groups.
double cross_similarity(const std::vector<double>& beta_weights, const Element& x,
                        const Element& y);

}  // namespace simlearn
