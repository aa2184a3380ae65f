#include "simlearn/learners/simple.hpp"

namespace simlearn {

namespace {

void check_training_inputs(const std::vector<GroupSample>& samples,
                           const std::vector<std::shared_ptr<const Metric>>& metrics) {
    if (samples.size() < 2)
        throw UsageError("train: at least two group samples required");
    if (metrics.size() != samples.size())
        throw UsageError("train: one metric per group required");
    for (std::size_t g = 0; g < samples.size(); ++g) {
        if (samples[g].group != static_cast<int>(g))
            throw UsageError("train: samples must appear in group order 0..gamma-1");
        if (samples[g].elements.empty())
            throw UsageError("train: empty group sample");
        if (!metrics[g])
            throw UsageError("train: null metric");
        samples[g].validate();
    }
}

}  // namespace

std::int64_t cross_pair_count(const std::vector<std::int64_t>& sizes) {
    std::int64_t total = 0;
    for (std::size_t a = 0; a < sizes.size(); ++a) {
        if (sizes[a] < 0) throw UsageError("cross_pair_count: negative size");
        for (std::size_t b = a + 1; b < sizes.size(); ++b)
            total += sizes[a] * sizes[b];
    }
    return total;
}

SimpleModel train_simple(std::vector<GroupSample> samples,
                         std::vector<std::shared_ptr<const Metric>> metrics,
                         Oracle& oracle, QueryMode mode) {
    check_training_inputs(samples, metrics);
    SimpleModel model;
    model.samples = std::move(samples);
    model.metrics = std::move(metrics);
    model.mode = mode;
    model.oracle = &oracle;
    if (mode == QueryMode::kEager) {
        const int gamma = static_cast<int>(model.samples.size());
        for (int lo = 0; lo < gamma; ++lo) {
            for (int hi = lo + 1; hi < gamma; ++hi) {
                const auto& A = model.samples[lo].elements;
                const auto& B = model.samples[hi].elements;
                PairTable table;
                table.rows = static_cast<std::int64_t>(A.size());
                table.cols = static_cast<std::int64_t>(B.size());
                table.values.reserve(A.size() * B.size());
                for (const auto& a : A)
                    for (const auto& b : B)
                        table.values.push_back(oracle.query(a, b));
                model.sigma.emplace(GroupPair{lo, hi}, std::move(table));
            }
        }
    }
    return model;
}

Prediction predict_simple_detail(const SimpleModel& model, const Element& x,
                                 const Element& y) {
    if (x.group == y.group)
        throw UsageError("predict: query points belong to the same group");
    const int gx = x.group;
    const int gy = y.group;
    if (gx < 0 || gx >= static_cast<int>(model.samples.size()) || gy < 0 ||
        gy >= static_cast<int>(model.samples.size()))
        throw UsageError("predict: unknown group");

    const Element& sx = nearest_in_sample(x, model.samples[gx], *model.metrics[gx]);
    const Element& sy = nearest_in_sample(y, model.samples[gy], *model.metrics[gy]);

    Prediction out;
    out.proxy_dist_x = model.metrics[gx]->distance(x, sx);
    out.proxy_dist_y = model.metrics[gy]->distance(y, sy);
    if (model.mode == QueryMode::kEager) {
        const auto key = make_group_pair(gx, gy);
        const Element& row = gx < gy ? sx : sy;
        const Element& col = gx < gy ? sy : sx;
        out.value = model.sigma.at(key).at(row.index, col.index);
    } else {
        if (!model.oracle) throw UsageError("predict: lazy model has no oracle");
        out.value = model.oracle->query(sx, sy);
    }
    return out;
}

double predict_simple(const SimpleModel& model, const Element& x, const Element& y) {
    return predict_simple_detail(model, x, y).value;
}

}  // namespace simlearn
