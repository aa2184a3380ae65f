#include "simlearn/core/metric.hpp"

#include <cmath>

namespace simlearn {

WeightedEuclideanMetric::WeightedEuclideanMetric(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty())
        throw UsageError("WeightedEuclideanMetric: weight vector is empty");
    for (double w : weights_)
        if (!(w >= 0.0))
            throw UsageError("WeightedEuclideanMetric: weights must be non-negative");
}

double WeightedEuclideanMetric::distance(const Element& x, const Element& y) const {
    if (x.features.size() != weights_.size() || y.features.size() != weights_.size())
        throw ShapeError("WeightedEuclideanMetric: feature dimension does not match weights");
    double acc = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const double d = x.features[i] - y.features[i];
        acc += weights_[i] * d * d;
    }
    return std::sqrt(acc);
}

double intra_distance(const Metric& metric, const Element& x, const Element& y) {
    if (x.group != y.group)
        throw UsageError("intra_distance: elements belong to different groups");
    return metric.distance(x, y);
}

const Element& nearest_in_sample(const Element& x, const GroupSample& sample,
                                 const Metric& metric) {
    if (sample.elements.empty())
        throw UsageError("nearest_in_sample: sample is empty");
    if (x.group != sample.group)
        throw UsageError("nearest_in_sample: element group does not match sample group");
    std::size_t best = 0;
    double best_dist = metric.distance(x, sample.elements[0]);
    for (std::size_t i = 1; i < sample.elements.size(); ++i) {
        const double d = metric.distance(x, sample.elements[i]);
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    return sample.elements[best];
}

}  // namespace simlearn
