#include "simlearn/datagen/mixture.hpp"

#include <cmath>

#include "simlearn/core/errors.hpp"

namespace simlearn {

void MixtureSpec::validate() const {
    if (components.empty()) throw UsageError("MixtureSpec: no components");
    if (weights.size() != components.size())
        throw UsageError("MixtureSpec: one weight per component required");
    const std::size_t d = components[0].mean.size();
    if (d == 0) throw UsageError("MixtureSpec: zero-dimensional components");
    for (const auto& c : components) {
        if (c.mean.size() != d || c.variances.size() != d)
            throw ShapeError("MixtureSpec: component dimension mismatch");
        for (double v : c.variances)
            if (!(v >= 0.0)) throw UsageError("MixtureSpec: negative variance");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw UsageError("MixtureSpec: weights must be positive");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw UsageError("MixtureSpec: weights must sum to 1");
}

MixtureSpec make_mixture_group(int dim, int k, double u_var, Rng& rng) {
    if (dim < 1) throw UsageError("make_mixture_group: dimension must be positive");
    if (k < 2) throw UsageError("make_mixture_group: at least two components required");
    if (!(u_var > 0.0)) throw UsageError("make_mixture_group: u_var must be positive");
    MixtureSpec spec;
    spec.components.resize(static_cast<std::size_t>(k));
    for (auto& c : spec.components) {
        c.mean.resize(static_cast<std::size_t>(dim));
        for (auto& m : c.mean) m = rng.uniform(0.0, 10.0);
        c.variances.resize(static_cast<std::size_t>(dim));
        for (auto& v : c.variances) v = rng.uniform(0.0, u_var);
    }
    spec.weights.resize(static_cast<std::size_t>(k));
    for (int c = 0; c < k - 1; ++c) spec.weights[static_cast<std::size_t>(c)] = std::ldexp(1.0, -(c + 1));
    spec.weights[static_cast<std::size_t>(k - 1)] = std::ldexp(1.0, -(k - 1));
    spec.validate();
    return spec;
}

std::vector<double> sample_from_mixture(const MixtureSpec& spec, Rng& rng) {
    const double u = rng.next_unit();
    std::size_t pick = spec.weights.size() - 1;
    double acc = 0.0;
    for (std::size_t c = 0; c < spec.weights.size(); ++c) {
        acc += spec.weights[c];
        if (u < acc) {
            pick = c;
            break;
        }
    }
    const auto& comp = spec.components[pick];
    std::vector<double> x(comp.mean.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = rng.normal(comp.mean[i], std::sqrt(comp.variances[i]));
    return x;
}

MixtureDistribution::MixtureDistribution(int group, MixtureSpec spec)
    : group_(group), spec_(std::move(spec)) {
    spec_.validate();
}

Element MixtureDistribution::draw(Rng& rng) {
    return Element{group_, counter_++, sample_from_mixture(spec_, rng)};
}

}  // namespace simlearn
