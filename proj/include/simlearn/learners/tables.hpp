#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "simlearn/core/errors.hpp"
#include "simlearn/oracle/weights.hpp"

namespace simlearn {

/// Whether learned cross-group tables are materialized up front or answered
/// through the oracle on demand. Lazy mode exists for budgets where the full
/// table would not fit in memory; predictions are identical either way.
enum class QueryMode { kEager, kLazy };

/// Dense row-major table of cross-group values. Rows belong to the lower
/// group of the pair, columns to the higher.
struct PairTable {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<double> values;

    double at(std::int64_t i, std::int64_t j) const {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw UsageError("PairTable: position out of range");
        return values[static_cast<std::size_t>(i * cols + j)];
    }
};

/// One table per group pair, keyed by (lo, hi).
using CrossTables = std::map<GroupPair, PairTable>;

/// Total number of distinct unordered cross-group pairs over samples of the
/// given sizes: sum over group pairs of the size product.
std::int64_t cross_pair_count(const std::vector<std::int64_t>& sizes);

}  // namespace simlearn
