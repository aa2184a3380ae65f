#pragma once

#include <cstdint>
#include <vector>

#include "simlearn/core/errors.hpp"

namespace simlearn {

/// A feature vector tagged with its group identity and a stable index.
/// (group, index) identifies an element within a dataset; the index is
/// unique within the element's sample or support.
struct Element {
    int group = 0;
    std::int64_t index = 0;
    std::vector<double> features;
};

/// An ordered i.i.d. sample from one group's distribution. Element indices
/// are 0..n-1 in list order (sampling order preserved); duplicates drawn by
/// the sampler are retained as distinct indices.
struct GroupSample {
    int group = 0;
    std::vector<Element> elements;

    std::int64_t size() const { return static_cast<std::int64_t>(elements.size()); }

    void validate() const {
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (elements[i].group != group)
                throw UsageError("GroupSample: element group does not match sample group");
            if (elements[i].index != static_cast<std::int64_t>(i))
                throw UsageError("GroupSample: element indices must be 0..n-1 in list order");
        }
    }
};

}  // namespace simlearn
