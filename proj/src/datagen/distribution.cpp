#include "simlearn/datagen/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "simlearn/core/errors.hpp"

namespace simlearn {

GroupSample collect_sample(GroupDistribution& dist, std::int64_t n, Rng& rng) {
    if (n < 1) throw UsageError("collect_sample: need at least one draw");
    GroupSample sample;
    sample.group = dist.group();
    sample.elements.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        Element e = dist.draw(rng);
        e.index = i;
        sample.elements.push_back(std::move(e));
    }
    return sample;
}

UniformIdDistribution::UniformIdDistribution(int group, std::int64_t count)
    : group_(group), count_(count) {
    if (count < 1) throw UsageError("UniformIdDistribution: empty support");
}

Element UniformIdDistribution::draw(Rng& rng) {
    const auto j = static_cast<std::int64_t>(rng.index(static_cast<std::size_t>(count_)));
    return Element{group_, counter_++, {static_cast<double>(j)}};
}

void FiniteSupportSpec::validate() const {
    if (support.empty()) throw UsageError("FiniteSupportSpec: empty support");
    if (probabilities.size() != support.size())
        throw UsageError("FiniteSupportSpec: one probability per support point required");
    const std::size_t dim = support[0].size();
    double total = 0.0;
    for (const auto& point : support)
        if (point.size() != dim)
            throw ShapeError("FiniteSupportSpec: support dimension mismatch");
    for (double p : probabilities) {
        if (!(p >= 0.0)) throw UsageError("FiniteSupportSpec: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw UsageError("FiniteSupportSpec: probabilities must sum to 1");
}

FiniteSupportDistribution::FiniteSupportDistribution(int group, FiniteSupportSpec spec)
    : group_(group), spec_(std::move(spec)) {
    spec_.validate();
    cumulative_.reserve(spec_.probabilities.size());
    double acc = 0.0;
    for (double p : spec_.probabilities) {
        acc += p;
        cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;  // guard against accumulated rounding
}

Element FiniteSupportDistribution::draw(Rng& rng) {
    const double u = rng.next_unit();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto pick = static_cast<std::size_t>(it - cumulative_.begin());
    return Element{group_, counter_++, spec_.support[pick]};
}

}  // namespace simlearn
