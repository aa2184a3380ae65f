#pragma once

#include <memory>

#include "simlearn/core/metric.hpp"
#include "simlearn/datagen/distribution.hpp"
#include "simlearn/oracle/oracle.hpp"

namespace simlearn {

/// 0/1 metric: distance 0 on exact feature equality, 1 otherwise.
class DiscreteMetric final : public Metric {
public:
    double distance(const Element& x, const Element& y) const override;
};

/// Oracle whose cross-group answers are i.i.d. U[0,1) values keyed by the
/// identities in features[0], materialized lazily from a seeded hash. The
/// answer structure carries no geometry, so nothing about unseen pairs can
/// be inferred from seen ones. Under 0/1 intra metrics any [0,1] similarity
/// satisfies both one-sided detour properties.
class TableOracle final : public Oracle {
public:
    explicit TableOracle(std::uint64_t seed) : seed_(seed) {}

    double query(const Element& x, const Element& y) override;
    double truth(const Element& x, const Element& y) const override;
    const QueryLedger& ledger() const override { return ledger_; }

private:
    std::uint64_t seed_;
    QueryLedger ledger_;
};

/// A fully wired two-group stress scenario: distributions, their intra
/// metrics and the similarity oracle.
struct AdversarialInstance {
    std::shared_ptr<GroupDistribution> group1;
    std::shared_ptr<GroupDistribution> group2;
    std::shared_ptr<TableOracle> oracle;
    std::shared_ptr<const Metric> metric1;
    std::shared_ptr<const Metric> metric2;
};

/// Group 0 is a single point, group 1 is uniform over `support_size`
/// distinct points, similarities are independent coin flips per pair. Any
/// learner that has queried only a few support points knows nothing about
/// the rest.
AdversarialInstance make_single_vs_uniform_instance(std::int64_t support_size,
                                                    std::uint64_t sigma_seed);

/// Both groups uniform over exactly 1/delta points, so every point's mass is
/// exactly delta and nothing is strictly rarer. 1/delta must be an integer.
AdversarialInstance make_uniform_pair_instance(double delta, std::uint64_t sigma_seed);

}  // namespace simlearn
