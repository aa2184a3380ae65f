#include "simlearn/learners/queryopt.hpp"

#include <algorithm>

namespace simlearn {

RepSelection select_representatives(const GroupSample& sample, const Metric& metric,
                                    double epsilon, double rho) {
    if (!(epsilon > 0.0) || !(rho > 0.0))
        throw UsageError("select_representatives: epsilon and rho must be positive");
    sample.validate();
    const std::int64_t n = sample.size();
    if (n == 0) throw UsageError("select_representatives: sample is empty");
    const double radius = rho * epsilon;

    RepSelection out;
    out.assignment.assign(static_cast<std::size_t>(n), -1);

    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<std::int64_t> ball;  // indices within `radius` of the current head
    // `cursor` only moves forward: everything below it is already assigned,
    // so the head chosen each round is the lowest unassigned index overall.
    std::int64_t cursor = 0;
    while (true) {
        while (cursor < n && out.assignment[static_cast<std::size_t>(cursor)] != -1)
            ++cursor;
        if (cursor == n) break;
        const std::int64_t head = cursor;
        const Element& hx = sample.elements[static_cast<std::size_t>(head)];

        ball.clear();
        for (std::int64_t i = 0; i < n; ++i) {
            dist[static_cast<std::size_t>(i)] =
                metric.distance(hx, sample.elements[static_cast<std::size_t>(i)]);
            if (dist[static_cast<std::size_t>(i)] <= radius) ball.push_back(i);
        }

        out.representatives.push_back(head);
        for (std::int64_t i = 0; i < n; ++i) {
            if (out.assignment[static_cast<std::size_t>(i)] != -1) continue;
            const double d = dist[static_cast<std::size_t>(i)];
            bool absorb;
            if (d <= radius) {
                absorb = true;  // i sits in the head's ball
            } else if (d > 2.0 * radius) {
                absorb = false;  // balls cannot intersect (triangle inequality)
            } else {
                // Ball overlap is only possible through a concrete witness.
                absorb = false;
                const Element& ex = sample.elements[static_cast<std::size_t>(i)];
                for (std::int64_t w : ball) {
                    if (metric.distance(ex, sample.elements[static_cast<std::size_t>(w)]) <=
                        radius) {
                        absorb = true;
                        break;
                    }
                }
            }
            if (absorb) out.assignment[static_cast<std::size_t>(i)] = head;
        }
    }
    return out;
}

std::vector<RepSelection> select_all_representatives(
    const std::vector<GroupSample>& samples,
    const std::vector<std::shared_ptr<const Metric>>& metrics, const Params& params) {
    params.validate();
    if (samples.size() != metrics.size() || samples.size() < 2)
        throw UsageError("select_all_representatives: samples/metrics mismatch");
    std::vector<RepSelection> out;
    out.reserve(samples.size());
    for (std::size_t g = 0; g < samples.size(); ++g)
        out.push_back(
            select_representatives(samples[g], *metrics[g], params.epsilon, params.rho));
    return out;
}

RepModel assemble_queryopt(std::vector<GroupSample> samples,
                           std::vector<std::shared_ptr<const Metric>> metrics,
                           std::vector<RepSelection> selections, const Params& params,
                           Oracle& oracle, QueryMode mode) {
    params.validate();
    if (samples.size() < 2 || metrics.size() != samples.size() ||
        selections.size() != samples.size())
        throw UsageError("assemble_queryopt: samples/metrics/selections mismatch");

    RepModel model;
    model.samples = std::move(samples);
    model.metrics = std::move(metrics);
    model.selections = std::move(selections);
    model.params = params;
    model.mode = mode;
    model.oracle = &oracle;

    model.rep_position.resize(model.samples.size());
    for (std::size_t g = 0; g < model.samples.size(); ++g) {
        const auto& sel = model.selections[g];
        if (sel.assignment.size() != model.samples[g].elements.size())
            throw UsageError("assemble_queryopt: selection does not match sample");
        for (std::size_t p = 0; p < sel.representatives.size(); ++p)
            model.rep_position[g].emplace(sel.representatives[p],
                                          static_cast<std::int64_t>(p));
    }

    if (mode == QueryMode::kEager) {
        const int gamma = static_cast<int>(model.samples.size());
        for (int lo = 0; lo < gamma; ++lo) {
            for (int hi = lo + 1; hi < gamma; ++hi) {
                const auto& reps_lo = model.selections[lo].representatives;
                const auto& reps_hi = model.selections[hi].representatives;
                PairTable table;
                table.rows = static_cast<std::int64_t>(reps_lo.size());
                table.cols = static_cast<std::int64_t>(reps_hi.size());
                table.values.reserve(reps_lo.size() * reps_hi.size());
                for (std::int64_t u : reps_lo) {
                    const Element& eu =
                        model.samples[lo].elements[static_cast<std::size_t>(u)];
                    for (std::int64_t v : reps_hi) {
                        const Element& ev =
                            model.samples[hi].elements[static_cast<std::size_t>(v)];
                        table.values.push_back(oracle.query(eu, ev));
                    }
                }
                model.sigma.emplace(GroupPair{lo, hi}, std::move(table));
            }
        }
    }
    return model;
}

RepModel train_queryopt(std::vector<GroupSample> samples,
                        std::vector<std::shared_ptr<const Metric>> metrics,
                        const Params& params, Oracle& oracle, QueryMode mode) {
    auto selections = select_all_representatives(samples, metrics, params);
    return assemble_queryopt(std::move(samples), std::move(metrics),
                             std::move(selections), params, oracle, mode);
}

Prediction predict_queryopt_detail(const RepModel& model, const Element& x,
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
    const std::int64_t head_x =
        model.selections[gx].assignment[static_cast<std::size_t>(sx.index)];
    const std::int64_t head_y =
        model.selections[gy].assignment[static_cast<std::size_t>(sy.index)];
    const Element& rx = model.samples[gx].elements[static_cast<std::size_t>(head_x)];
    const Element& ry = model.samples[gy].elements[static_cast<std::size_t>(head_y)];

    Prediction out;
    out.proxy_dist_x = model.metrics[gx]->distance(x, sx);
    out.proxy_dist_y = model.metrics[gy]->distance(y, sy);
    if (model.mode == QueryMode::kEager) {
        const auto key = make_group_pair(gx, gy);
        const std::int64_t row = gx < gy ? model.rep_position[gx].at(head_x)
                                         : model.rep_position[gy].at(head_y);
        const std::int64_t col = gx < gy ? model.rep_position[gy].at(head_y)
                                         : model.rep_position[gx].at(head_x);
        out.value = model.sigma.at(key).at(row, col);
    } else {
        if (!model.oracle) throw UsageError("predict: lazy model has no oracle");
        out.value = model.oracle->query(rx, ry);
    }
    return out;
}

double predict_queryopt(const RepModel& model, const Element& x, const Element& y) {
    return predict_queryopt_detail(model, x, y).value;
}

std::vector<std::int64_t> representative_counts(const RepModel& model) {
    std::vector<std::int64_t> out;
    out.reserve(model.selections.size());
    for (const auto& sel : model.selections)
        out.push_back(static_cast<std::int64_t>(sel.representatives.size()));
    return out;
}

}  // namespace simlearn
