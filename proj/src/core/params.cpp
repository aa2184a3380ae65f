#include "simlearn/core/params.hpp"

#include <cmath>

namespace simlearn {

std::int64_t sample_budget(double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw UsageError("sample_budget: delta must lie in (0, 1)");
    const double raw = (1.0 / delta) * std::log(1.0 / (delta * delta));
    return static_cast<std::int64_t>(std::ceil(raw));
}

}  // namespace simlearn
