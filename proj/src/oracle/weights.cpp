#include "simlearn/oracle/weights.hpp"

#include <algorithm>
#include <cmath>

#include "simlearn/core/errors.hpp"

namespace simlearn {

GroupPair make_group_pair(int a, int b) {
    if (a == b) throw UsageError("make_group_pair: groups must differ");
    return a < b ? GroupPair{a, b} : GroupPair{b, a};
}

void OracleSpec::validate() const {
    const int gamma = static_cast<int>(alpha.size());
    if (gamma < 2) throw UsageError("OracleSpec: at least two groups required");
    const std::size_t dim = alpha[0].size();
    if (dim == 0) throw UsageError("OracleSpec: zero-dimensional weights");
    for (const auto& a : alpha) {
        if (a.size() != dim) throw ShapeError("OracleSpec: alpha dimension mismatch");
        for (double w : a)
            if (!(w >= 0.0)) throw UsageError("OracleSpec: alpha weights must be non-negative");
    }
    const std::size_t expected_pairs =
        static_cast<std::size_t>(gamma) * (gamma - 1) / 2;
    if (beta.size() != expected_pairs)
        throw UsageError("OracleSpec: one beta vector per group pair required");
    for (const auto& [pair, b] : beta) {
        if (pair.first < 0 || pair.second >= gamma || pair.first >= pair.second)
            throw UsageError("OracleSpec: beta key is not a valid (lo, hi) group pair");
        if (b.size() != dim) throw ShapeError("OracleSpec: beta dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) {
            const double cap = std::min(alpha[pair.first][i], alpha[pair.second][i]);
            if (!(b[i] >= 0.0) || b[i] > cap)
                throw UsageError(
                    "OracleSpec: beta weight exceeds the smaller alpha in its coordinate");
        }
    }
}

const std::vector<double>& OracleSpec::alpha_for(int group) const {
    if (group < 0 || group >= static_cast<int>(alpha.size()))
        throw UsageError("OracleSpec: unknown group");
    return alpha[group];
}

const std::vector<double>& OracleSpec::beta_for(int group_a, int group_b) const {
    auto it = beta.find(make_group_pair(group_a, group_b));
    if (it == beta.end()) throw UsageError("OracleSpec: unknown group pair");
    return it->second;
}

WeightedEuclideanMetric OracleSpec::intra_metric(int group) const {
    return WeightedEuclideanMetric(alpha_for(group));
}

OracleSpec draw_weights(int dim, int gamma, Rng& rng) {
    if (dim < 1) throw UsageError("draw_weights: dimension must be positive");
    if (gamma < 2) throw UsageError("draw_weights: at least two groups required");
    OracleSpec spec;
    spec.alpha.resize(gamma);
    for (int g = 0; g < gamma; ++g) {
        spec.alpha[g].resize(dim);
        for (int i = 0; i < dim; ++i) spec.alpha[g][i] = rng.next_unit();
    }
    for (int lo = 0; lo < gamma; ++lo) {
        for (int hi = lo + 1; hi < gamma; ++hi) {
            std::vector<double> b(dim);
            for (int i = 0; i < dim; ++i)
                b[i] = rng.uniform(0.0, std::min(spec.alpha[lo][i], spec.alpha[hi][i]));
            spec.beta.emplace(GroupPair{lo, hi}, std::move(b));
        }
    }
    return spec;
}

double cross_similarity(const std::vector<double>& beta_weights, const Element& x,
                        const Element& y) {
    if (x.group == y.group)
        throw UsageError("cross_similarity: elements belong to the same group");
    if (x.features.size() != beta_weights.size() ||
        y.features.size() != beta_weights.size())
        throw ShapeError("cross_similarity: feature dimension does not match weights");
    double acc = 0.0;
    for (std::size_t i = 0; i < beta_weights.size(); ++i) {
        const double d = x.features[i] - y.features[i];
        acc += beta_weights[i] * d * d;
    }
    return std::sqrt(acc);
}

}  // namespace simlearn
