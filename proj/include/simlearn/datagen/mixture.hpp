#pragma once

#include <vector>

#include "simlearn/datagen/distribution.hpp"

namespace simlearn {

/// Axis-aligned Gaussian bump.
struct GaussianComponent {
    std::vector<double> mean;
    std::vector<double> variances;
};

/// Mixture of diagonal Gaussians with fixed mixing weights.
struct MixtureSpec {
    std::vector<GaussianComponent> components;
    std::vector<double> weights;

    void validate() const;
    std::size_t dim() const { return components.empty() ? 0 : components[0].mean.size(); }
};

/// Random mixture: k components in `dim` dimensions, means ~ U[0, 10] and
/// variances ~ U[0, u_var] per coordinate (means before variances, component
/// by component). Mixing weights are the exact dyadic ladder 1/2, 1/4, ...,
/// with the last rung doubled so they sum to exactly 1.
MixtureSpec make_mixture_group(int dim, int k, double u_var, Rng& rng);

/// One draw: component by inverse CDF over the weights, then each coordinate
/// from that component's Gaussian.
std::vector<double> sample_from_mixture(const MixtureSpec& spec, Rng& rng);

class MixtureDistribution final : public GroupDistribution {
public:
    MixtureDistribution(int group, MixtureSpec spec);

    int group() const override { return group_; }
    Element draw(Rng& rng) override;

    const MixtureSpec& spec() const { return spec_; }

private:
    int group_;
    MixtureSpec spec_;
    std::int64_t counter_ = 0;
};

}  // namespace simlearn
