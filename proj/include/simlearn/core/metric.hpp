#pragma once

#include <vector>

#include "simlearn/core/element.hpp"
#include "simlearn/core/errors.hpp"

namespace simlearn {

/// Distance function over feature vectors. Implementations must be
/// non-negative and symmetric; the library additionally assumes the
/// triangle inequality when pruning candidate sets.
class Metric {
public:
    virtual ~Metric() = default;
    virtual double distance(const Element& x, const Element& y) const = 0;
};

/// sqrt(sum_i w_i * (x_i - y_i)^2) with fixed non-negative weights.
class WeightedEuclideanMetric final : public Metric {
public:
    explicit WeightedEuclideanMetric(std::vector<double> weights);

    double distance(const Element& x, const Element& y) const override;

    const std::vector<double>& weights() const { return weights_; }
    std::size_t dim() const { return weights_.size(); }

private:
    std::vector<double> weights_;
};

/// Distance within one group; both elements must carry the same group tag.
double intra_distance(const Metric& metric, const Element& x, const Element& y);

/// Element of `sample` closest to `x` under `metric`. Ties break toward the
/// lowest index. The sample must be non-empty and share x's group.
const Element& nearest_in_sample(const Element& x, const GroupSample& sample,
                                 const Metric& metric);

}  // namespace simlearn
