#include "simlearn/analysis/trials.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace simlearn {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRelErrFloor = 1e-12;

double rel_err_pct(double pred, double truth) {
    if (truth < kRelErrFloor) return kNaN;
    return 100.0 * std::abs(pred - truth) / truth;
}
}  // namespace

PairSource make_distribution_pair_source(std::shared_ptr<GroupDistribution> a,
                                         std::shared_ptr<GroupDistribution> b, Rng rng) {
    if (!a || !b) throw UsageError("make_distribution_pair_source: null distribution");
    if (a->group() == b->group())
        throw UsageError("make_distribution_pair_source: distributions share a group");
    return [a, b, rng]() mutable {
        Element x = a->draw(rng);
        Element y = b->draw(rng);
        return std::make_pair(std::move(x), std::move(y));
    };
}

std::vector<TrialRecord> run_trials(const SimpleModel* simple, const RepModel* queryopt,
                                    const Oracle& oracle, const PairSource& next_pair,
                                    std::int64_t n_trials, double epsilon) {
    if (!simple && !queryopt) throw UsageError("run_trials: no model given");
    if (n_trials < 1) throw UsageError("run_trials: need at least one trial");
    if (!(epsilon > 0.0)) throw UsageError("run_trials: epsilon must be positive");

    std::vector<TrialRecord> records;
    records.reserve(static_cast<std::size_t>(n_trials));
    for (std::int64_t t = 0; t < n_trials; ++t) {
        std::pair<Element, Element> pair;
        try {
            pair = next_pair();
        } catch (const ExhaustedError& e) {
            throw ExhaustedError("run_trials: pair source dry after " +
                                 std::to_string(t) + " of " + std::to_string(n_trials) +
                                 " trials (" + e.what() + ")");
        }
        const Element& x = pair.first;
        const Element& y = pair.second;

        TrialRecord rec;
        rec.true_sigma = oracle.truth(x, y);
        rec.simple_prediction = kNaN;
        rec.simple_rel_err_pct = kNaN;
        rec.simple_abs_over_eps = kNaN;
        rec.queryopt_prediction = kNaN;
        rec.queryopt_rel_err_pct = kNaN;
        rec.queryopt_abs_over_eps = kNaN;

        bool have_proxy = false;
        if (simple) {
            const Prediction p = predict_simple_detail(*simple, x, y);
            rec.simple_prediction = p.value;
            rec.simple_rel_err_pct = rel_err_pct(p.value, rec.true_sigma);
            rec.simple_abs_over_eps = std::abs(p.value - rec.true_sigma) / epsilon;
            rec.proxy_dist_x = p.proxy_dist_x;
            rec.proxy_dist_y = p.proxy_dist_y;
            have_proxy = true;
        }
        if (queryopt) {
            const Prediction p = predict_queryopt_detail(*queryopt, x, y);
            rec.queryopt_prediction = p.value;
            rec.queryopt_rel_err_pct = rel_err_pct(p.value, rec.true_sigma);
            rec.queryopt_abs_over_eps = std::abs(p.value - rec.true_sigma) / epsilon;
            if (!have_proxy) {
                rec.proxy_dist_x = p.proxy_dist_x;
                rec.proxy_dist_y = p.proxy_dist_y;
            }
        }
        records.push_back(rec);
    }
    return records;
}

}  // namespace simlearn
