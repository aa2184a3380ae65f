#include "simlearn/analysis/cover.hpp"

#include <cstdint>
#include <vector>

#include "simlearn/core/errors.hpp"

namespace simlearn {

int bruteforce_set_cover_opt(const GroupSample& sample, const Metric& metric,
                             double radius) {
    if (!(radius >= 0.0))
        throw UsageError("bruteforce_set_cover_opt: radius must be non-negative");
    const int n = static_cast<int>(sample.elements.size());
    if (n == 0) throw UsageError("bruteforce_set_cover_opt: sample is empty");
    if (n > 20) throw UsageError("bruteforce_set_cover_opt: capped at 20 elements");

    std::vector<std::uint32_t> ball(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < n; ++i)
            if (metric.distance(sample.elements[static_cast<std::size_t>(c)],
                                sample.elements[static_cast<std::size_t>(i)]) <= radius)
                ball[static_cast<std::size_t>(c)] |= (std::uint32_t{1} << i);

    const std::uint32_t full = n == 32 ? ~std::uint32_t{0}
                                       : ((std::uint32_t{1} << n) - 1);
    // dp[m] = fewest balls covering exactly the points in mask m (at least).
    // Branching only on the lowest uncovered point keeps this linear in the
    // number of masks times n.
    std::vector<int> dp(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        const int low = __builtin_ctz(m);
        int best = n + 1;
        for (int c = 0; c < n; ++c) {
            if (!(ball[static_cast<std::size_t>(c)] & (std::uint32_t{1} << low))) continue;
            const int cand = 1 + dp[m & ~ball[static_cast<std::size_t>(c)]];
            if (cand < best) best = cand;
        }
        dp[m] = best;
    }
    return dp[full];
}

}  // namespace simlearn
