#include "simlearn/datagen/adversarial.hpp"

#include <cmath>

#include "simlearn/core/errors.hpp"

namespace simlearn {

double DiscreteMetric::distance(const Element& x, const Element& y) const {
    if (x.features.size() != y.features.size())
        throw ShapeError("DiscreteMetric: feature dimension mismatch");
    return x.features == y.features ? 0.0 : 1.0;
}

namespace {

std::int64_t identity_of(const Element& e) {
    if (e.features.empty())
        throw UsageError("TableOracle: element has no identity feature");
    return std::llround(e.features[0]);
}

}  // namespace

double TableOracle::query(const Element& x, const Element& y) {
    return ledger_.fetch_or_compute(x, y, [this](const Element& a, const Element& b) {
        return truth(a, b);
    });
}

double TableOracle::truth(const Element& x, const Element& y) const {
    if (x.group == y.group)
        throw UsageError("TableOracle: elements belong to the same group");
    const Element* lo = x.group < y.group ? &x : &y;
    const Element* hi = x.group < y.group ? &y : &x;
    return unit_from_hash(seed_, static_cast<std::uint64_t>(identity_of(*lo)),
                          static_cast<std::uint64_t>(identity_of(*hi)));
}

AdversarialInstance make_single_vs_uniform_instance(std::int64_t support_size,
                                                    std::uint64_t sigma_seed) {
    if (support_size < 2)
        throw UsageError("make_single_vs_uniform_instance: support too small");
    AdversarialInstance inst;
    inst.group1 = std::make_shared<PointMassDistribution>(0, std::vector<double>{0.0});
    inst.group2 = std::make_shared<UniformIdDistribution>(1, support_size);
    inst.oracle = std::make_shared<TableOracle>(sigma_seed);
    inst.metric1 = std::make_shared<DiscreteMetric>();
    inst.metric2 = std::make_shared<DiscreteMetric>();
    return inst;
}

AdversarialInstance make_uniform_pair_instance(double delta, std::uint64_t sigma_seed) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw UsageError("make_uniform_pair_instance: delta must lie in (0, 1)");
    const double raw = 1.0 / delta;
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > 1e-9)
        throw UsageError("make_uniform_pair_instance: 1/delta must be an integer");
    const auto count = static_cast<std::int64_t>(rounded);
    AdversarialInstance inst;
    inst.group1 = std::make_shared<UniformIdDistribution>(0, count);
    inst.group2 = std::make_shared<UniformIdDistribution>(1, count);
    inst.oracle = std::make_shared<TableOracle>(sigma_seed);
    inst.metric1 = std::make_shared<DiscreteMetric>();
    inst.metric2 = std::make_shared<DiscreteMetric>();
    return inst;
}

}  // namespace simlearn
