#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "simlearn/core/element.hpp"
#include "simlearn/core/rng.hpp"

namespace simlearn {

/// Source of i.i.d. draws for one group. Implementations stamp each draw
/// with a running index; collect_sample() rewrites indices to list positions,
/// so identity that must survive sampling belongs in the features.
class GroupDistribution {
public:
    virtual ~GroupDistribution() = default;
    virtual int group() const = 0;
    virtual Element draw(Rng& rng) = 0;
};

/// n draws packaged as a GroupSample with indices 0..n-1 in draw order.
/// Duplicate draws stay as distinct entries.
GroupSample collect_sample(GroupDistribution& dist, std::int64_t n, Rng& rng);

/// Distribution concentrated on a single feature vector.
class PointMassDistribution final : public GroupDistribution {
public:
    PointMassDistribution(int group, std::vector<double> features)
        : group_(group), features_(std::move(features)) {}

    int group() const override { return group_; }
    Element draw(Rng&) override {
        return Element{group_, counter_++, features_};
    }

private:
    int group_;
    std::vector<double> features_;
    std::int64_t counter_ = 0;
};

/// Uniform over a support of `count` synthetic points; point j carries the
/// single feature j. Nothing is materialized, so the support can be huge.
class UniformIdDistribution final : public GroupDistribution {
public:
    UniformIdDistribution(int group, std::int64_t count);

    int group() const override { return group_; }
    Element draw(Rng& rng) override;

    std::int64_t support_size() const { return count_; }

private:
    int group_;
    std::int64_t count_;
    std::int64_t counter_ = 0;
};

/// Explicit finite support with arbitrary point masses.
struct FiniteSupportSpec {
    std::vector<std::vector<double>> support;
    std::vector<double> probabilities;  // non-negative, sums to 1

    void validate() const;
};

class FiniteSupportDistribution final : public GroupDistribution {
public:
    FiniteSupportDistribution(int group, FiniteSupportSpec spec);

    int group() const override { return group_; }
    Element draw(Rng& rng) override;

    const FiniteSupportSpec& spec() const { return spec_; }

private:
    int group_;
    FiniteSupportSpec spec_;
    std::vector<double> cumulative_;
    std::int64_t counter_ = 0;
};

}  // namespace simlearn
