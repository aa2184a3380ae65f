#include "simlearn/analysis/rare.hpp"

#include <cmath>

#include "simlearn/core/errors.hpp"

namespace simlearn {

RareEstimate estimate_rare_probability(GroupDistribution& dist, const Metric& metric,
                                       double epsilon, double delta, std::int64_t outer,
                                       std::int64_t inner, Rng& rng) {
    if (!(epsilon > 0.0))
        throw UsageError("estimate_rare_probability: epsilon must be positive");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw UsageError("estimate_rare_probability: delta must lie in (0, 1)");
    if (outer < 1) throw UsageError("estimate_rare_probability: need outer draws");
    const auto floor_inner = static_cast<std::int64_t>(std::ceil(10.0 / delta));
    if (inner == 0) inner = static_cast<std::int64_t>(std::ceil(50.0 / delta));
    if (inner < floor_inner)
        throw UsageError("estimate_rare_probability: inner sample too small for delta");

    // Outer points first, then one derived stream per point for its ball
    // draws: growing `inner` refines every estimate instead of reshuffling
    // the outer sample.
    const std::uint64_t inner_seed = rng.next_u64();
    std::vector<Element> points;
    points.reserve(static_cast<std::size_t>(outer));
    for (std::int64_t i = 0; i < outer; ++i) points.push_back(dist.draw(rng));

    RareEstimate est;
    est.outer = outer;
    est.inner = inner;
    est.ball_mass.reserve(static_cast<std::size_t>(outer));
    est.rare.reserve(static_cast<std::size_t>(outer));
    std::int64_t flagged = 0;
    for (std::int64_t i = 0; i < outer; ++i) {
        Rng inner_rng(inner_seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
        std::int64_t hits = 0;
        for (std::int64_t j = 0; j < inner; ++j) {
            const Element z = dist.draw(inner_rng);
            if (metric.distance(points[static_cast<std::size_t>(i)], z) <= epsilon) ++hits;
        }
        const double mass = static_cast<double>(hits) / static_cast<double>(inner);
        const bool is_rare = mass < delta;
        est.ball_mass.push_back(mass);
        est.rare.push_back(is_rare);
        if (is_rare) ++flagged;
    }
    est.p_hat = static_cast<double>(flagged) / static_cast<double>(outer);
    return est;
}

}  // namespace simlearn
