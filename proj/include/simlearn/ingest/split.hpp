#pragma once

#include <functional>

#include "simlearn/core/element.hpp"
#include "simlearn/core/rng.hpp"
#include "simlearn/ingest/encode.hpp"

namespace simlearn {

/// Partitions table rows by a predicate on a categorical column's label.
/// Returns (rows where the predicate holds, rows where it does not); either
/// side being empty is a DataError since both groups need members.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> split_groups(
    const RawTable& table, const std::string& column,
    const std::function<bool(const std::string&)>& in_group_one);

/// Hands out the rows of one group in a fixed random order, each at most
/// once. Shuffles up front, so a train prefix taken first and test draws
/// taken later can never overlap.
class PermutationSampler {
public:
    /// `matrix` must outlive the sampler. `row_ids` selects this group's rows.
    PermutationSampler(int group, const NumericMatrix& matrix,
                       std::vector<std::int64_t> row_ids, Rng& rng);

    int group() const { return group_; }
    std::int64_t remaining() const;

    /// Next unseen row as an element; ExhaustedError when none are left.
    Element next();

    /// n draws packaged with indices 0..n-1 in draw order.
    GroupSample take(std::int64_t n);

private:
    int group_;
    const NumericMatrix* matrix_;
    std::vector<std::int64_t> order_;
    std::size_t cursor_ = 0;
    std::int64_t handed_out_ = 0;
};

}  // namespace simlearn
