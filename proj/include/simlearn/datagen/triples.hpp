#pragma once

#include <vector>

#include "simlearn/datagen/distribution.hpp"
#include "simlearn/oracle/properties.hpp"

namespace simlearn {

/// `count` random detour triples: endpoints x ~ a, y ~ b, with the detour
/// point alternating between the two distributions so both one-sided
/// properties get exercised evenly.
std::vector<CrossTriple> make_property_triples(GroupDistribution& a,
                                               GroupDistribution& b,
                                               std::int64_t count, Rng& rng);

}  // namespace simlearn
