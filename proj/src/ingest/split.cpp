#include "simlearn/ingest/split.hpp"

#include <utility>

#include "simlearn/core/errors.hpp"

namespace simlearn {

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> split_groups(
    const RawTable& table, const std::string& column,
    const std::function<bool(const std::string&)>& in_group_one) {
    const std::size_t col = table.schema.column_index(column);
    if (table.schema.columns[col].kind != ColumnKind::kCategorical)
        throw UsageError("split_groups: '" + column + "' is not categorical");
    std::vector<std::int64_t> ones, others;
    for (std::int64_t r = 0; r < table.rows; ++r) {
        if (in_group_one(table.labels[col][static_cast<std::size_t>(r)]))
            ones.push_back(r);
        else
            others.push_back(r);
    }
    if (ones.empty() || others.empty())
        throw DataError("split_groups: column '" + column +
                        "' does not split the rows into two non-empty groups");
    return {std::move(ones), std::move(others)};
}

PermutationSampler::PermutationSampler(int group, const NumericMatrix& matrix,
                                       std::vector<std::int64_t> row_ids, Rng& rng)
    : group_(group), matrix_(&matrix), order_(std::move(row_ids)) {
    if (order_.empty()) throw UsageError("PermutationSampler: no rows");
    for (std::int64_t r : order_)
        if (r < 0 || r >= matrix.rows)
            throw UsageError("PermutationSampler: row id out of range");
    for (std::size_t i = order_.size() - 1; i > 0; --i) {
        const std::size_t j = rng.index(i + 1);
        std::swap(order_[i], order_[j]);
    }
}

std::int64_t PermutationSampler::remaining() const {
    return static_cast<std::int64_t>(order_.size() - cursor_);
}

Element PermutationSampler::next() {
    if (cursor_ >= order_.size())
        throw ExhaustedError("PermutationSampler: all rows handed out");
    const std::int64_t row = order_[cursor_++];
    return Element{group_, handed_out_++, matrix_->row(row)};
}

GroupSample PermutationSampler::take(std::int64_t n) {
    if (n < 1) throw UsageError("PermutationSampler: need at least one row");
    if (n > remaining())
        throw ExhaustedError("PermutationSampler: " + std::to_string(n) +
                             " rows requested, " + std::to_string(remaining()) + " left");
    GroupSample sample;
    sample.group = group_;
    sample.elements.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        Element e = next();
        e.index = i;
        sample.elements.push_back(std::move(e));
    }
    return sample;
}

}  // namespace simlearn
