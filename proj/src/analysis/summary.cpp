#include "simlearn/analysis/summary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "simlearn/core/errors.hpp"

namespace simlearn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<double> default_rel_err_edges() {
    return {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0, kInf};
}

std::vector<double> default_abs_over_eps_edges() {
    return {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 38.0, kInf};
}

Histogram build_histogram(const std::vector<double>& values,
                          const std::vector<double>& edges) {
    if (edges.size() < 2) throw UsageError("build_histogram: need at least two edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i - 1] < edges[i]))
            throw UsageError("build_histogram: edges must increase strictly");
    Histogram h;
    h.edges = edges;
    h.counts.assign(edges.size() - 1, 0);
    for (double v : values) {
        if (std::isnan(v)) {
            h.excluded += 1;
            continue;
        }
        if (v < edges.front() || v >= edges.back()) {
            h.excluded += 1;
            continue;
        }
        const auto it = std::upper_bound(h.edges.begin(), h.edges.end(), v);
        h.counts[static_cast<std::size_t>(it - h.edges.begin()) - 1] += 1;
    }
    return h;
}

double quantile_nearest_rank(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw UsageError("quantile_nearest_rank: empty data");
    if (!(p > 0.0) || p > 1.0)
        throw UsageError("quantile_nearest_rank: p must lie in (0, 1]");
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(p * n));
    if (rank == 0) rank = 1;
    return sorted[rank - 1];
}

namespace {

StatBlock make_stat_block(std::vector<double> values, const std::vector<double>& edges) {
    StatBlock block;
    block.hist = build_histogram(values, edges);
    std::vector<double> finite;
    finite.reserve(values.size());
    for (double v : values) {
        if (std::isnan(v))
            block.excluded += 1;
        else
            finite.push_back(v);
    }
    block.count = static_cast<std::int64_t>(finite.size());
    if (finite.empty()) {
        block.mean = block.median = block.p90 = block.p99 = block.max =
            std::numeric_limits<double>::quiet_NaN();
        return block;
    }
    std::sort(finite.begin(), finite.end());
    double acc = 0.0;
    for (double v : finite) acc += v;
    block.mean = acc / static_cast<double>(finite.size());
    block.median = quantile_nearest_rank(finite, 0.5);
    block.p90 = quantile_nearest_rank(finite, 0.9);
    block.p99 = quantile_nearest_rank(finite, 0.99);
    block.max = finite.back();
    return block;
}

}  // namespace

ErrorSummary summarize_errors(const std::vector<TrialRecord>& records,
                              const std::vector<double>& rel_edges,
                              const std::vector<double>& abs_edges) {
    if (records.empty()) throw UsageError("summarize_errors: no records");
    bool have_simple = false;
    bool have_queryopt = false;
    for (const auto& r : records) {
        have_simple = have_simple || !std::isnan(r.simple_prediction);
        have_queryopt = have_queryopt || !std::isnan(r.queryopt_prediction);
    }
    ErrorSummary out;
    if (have_simple) {
        std::vector<double> rel, abs;
        rel.reserve(records.size());
        abs.reserve(records.size());
        for (const auto& r : records) {
            rel.push_back(r.simple_rel_err_pct);
            abs.push_back(r.simple_abs_over_eps);
        }
        out.simple = LearnerSummary{make_stat_block(std::move(rel), rel_edges),
                                    make_stat_block(std::move(abs), abs_edges)};
    }
    if (have_queryopt) {
        std::vector<double> rel, abs;
        rel.reserve(records.size());
        abs.reserve(records.size());
        for (const auto& r : records) {
            rel.push_back(r.queryopt_rel_err_pct);
            abs.push_back(r.queryopt_abs_over_eps);
        }
        out.queryopt = LearnerSummary{make_stat_block(std::move(rel), rel_edges),
                                      make_stat_block(std::move(abs), abs_edges)};
    }
    return out;
}

double query_decrease_pct(std::int64_t simple_count, std::int64_t queryopt_count) {
    if (simple_count <= 0)
        throw UsageError("query_decrease_pct: baseline count must be positive");
    return 100.0 * static_cast<double>(simple_count - queryopt_count) /
           static_cast<double>(simple_count);
}

}  // namespace simlearn
