#include "simlearn/datagen/triples.hpp"

#include "simlearn/core/errors.hpp"

namespace simlearn {

std::vector<CrossTriple> make_property_triples(GroupDistribution& a,
                                               GroupDistribution& b,
                                               std::int64_t count, Rng& rng) {
    if (count < 1) throw UsageError("make_property_triples: need at least one triple");
    if (a.group() == b.group())
        throw UsageError("make_property_triples: distributions share a group");
    std::vector<CrossTriple> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        CrossTriple t;
        t.x = a.draw(rng);
        t.y = b.draw(rng);
        t.z = (i % 2 == 0) ? a.draw(rng) : b.draw(rng);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace simlearn
