#pragma once

#include <cstdint>

#include "simlearn/core/errors.hpp"

namespace simlearn {

/// Learner parameters shared across the library.
///   epsilon  accuracy scale for guarantees and ball radii
///   delta    confidence / rarity level in (0, 1)
///   gamma    number of groups (>= 2)
///   rho      ball-radius multiplier for the query-optimized learner
struct Params {
    double epsilon = 0.1;
    double delta = 0.1;
    int gamma = 2;
    double rho = 8.0;

    void validate() const {
        if (!(epsilon > 0.0)) throw UsageError("Params: epsilon must be positive");
        if (!(delta > 0.0) || !(delta < 1.0))
            throw UsageError("Params: delta must lie in (0, 1)");
        if (gamma < 2) throw UsageError("Params: at least two groups required");
        if (!(rho > 0.0)) throw UsageError("Params: rho must be positive");
    }
};

/// Per-group sample size guaranteeing coverage of all but delta-rare points:
/// ceil((1/delta) * ln(1/delta^2)).
std::int64_t sample_budget(double delta);

}  // namespace simlearn
