#include "simlearn/oracle/properties.hpp"

#include <algorithm>

#include "simlearn/core/errors.hpp"

namespace simlearn {

PropertyReport verify_cross_metric_properties(
    const Metric& d_first, const Metric& d_second,
    const std::function<double(const Element&, const Element&)>& sigma,
    const std::vector<CrossTriple>& triples, double tolerance) {
    if (!(tolerance >= 0.0))
        throw UsageError("verify_cross_metric_properties: tolerance must be non-negative");
    PropertyReport report;
    bool first = true;
    for (const auto& t : triples) {
        if (t.x.group == t.y.group)
            throw UsageError("verify_cross_metric_properties: endpoints share a group");
        const double direct = sigma(t.x, t.y);
        double detour = 0.0;
        if (t.z.group == t.x.group) {
            detour = d_first.distance(t.x, t.z) + sigma(t.z, t.y);
        } else if (t.z.group == t.y.group) {
            detour = sigma(t.x, t.z) + d_second.distance(t.z, t.y);
        } else {
            throw UsageError(
                "verify_cross_metric_properties: detour point lies in neither endpoint group");
        }
        const double slack = detour - direct;
        report.checked += 1;
        if (slack < -tolerance) report.violations += 1;
        if (first || slack < report.worst_slack) {
            report.worst_slack = slack;
            first = false;
        }
    }
    return report;
}

}  // namespace simlearn
