#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simlearn/ingest/csv.hpp"

namespace simlearn {

/// Label -> positive integer code, assigned by first appearance (1..K).
struct CategoryMap {
    std::vector<std::string> categories;

    double code_of(const std::string& label) const;
    bool contains(const std::string& label) const;
};

/// Dense row-major matrix of fully numeric features.
struct NumericMatrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<double> values;

    double at(std::int64_t r, std::int64_t c) const { return values[index(r, c)]; }
    double& at(std::int64_t r, std::int64_t c) { return values[index(r, c)]; }
    std::vector<double> row(std::int64_t r) const;

private:
    std::size_t index(std::int64_t r, std::int64_t c) const;
};

/// One CategoryMap per column (empty for numeric columns), learned from the
/// table in row order.
std::vector<CategoryMap> fit_encoding(const RawTable& table);

/// All columns as numbers: numeric pass through, categorical become their
/// codes. A label absent from its map raises DataError.
NumericMatrix encode_categoricals(const RawTable& table,
                                  const std::vector<CategoryMap>& maps);

/// Per-column shift and scale fitted on some reference rows.
struct Standardization {
    std::vector<double> mean;
    std::vector<double> stddev;  // population convention; 0 marks a constant column
};

/// Centers and scales every column by its population statistics; constant
/// columns map to all-zero. Needs at least two rows to be meaningful.
std::pair<NumericMatrix, Standardization> standardize(const NumericMatrix& matrix);

/// Applies previously fitted statistics to new rows.
NumericMatrix apply_standardization(const NumericMatrix& matrix,
                                    const Standardization& stats);

}  // namespace simlearn
