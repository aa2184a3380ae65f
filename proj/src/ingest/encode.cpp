#include "simlearn/ingest/encode.hpp"

#include <cmath>
#include <unordered_map>

#include "simlearn/core/errors.hpp"

namespace simlearn {

double CategoryMap::code_of(const std::string& label) const {
    for (std::size_t i = 0; i < categories.size(); ++i)
        if (categories[i] == label) return static_cast<double>(i + 1);
    throw DataError("CategoryMap: unseen label '" + label + "'");
}

bool CategoryMap::contains(const std::string& label) const {
    for (const auto& c : categories)
        if (c == label) return true;
    return false;
}

std::size_t NumericMatrix::index(std::int64_t r, std::int64_t c) const {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw UsageError("NumericMatrix: position out of range");
    return static_cast<std::size_t>(r * cols + c);
}

std::vector<double> NumericMatrix::row(std::int64_t r) const {
    std::vector<double> out(static_cast<std::size_t>(cols));
    for (std::int64_t c = 0; c < cols; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
    return out;
}

std::vector<CategoryMap> fit_encoding(const RawTable& table) {
    std::vector<CategoryMap> maps(table.schema.columns.size());
    for (std::size_t c = 0; c < table.schema.columns.size(); ++c) {
        if (table.schema.columns[c].kind != ColumnKind::kCategorical) continue;
        std::unordered_map<std::string, bool> seen;
        for (const auto& label : table.labels[c]) {
            if (seen.emplace(label, true).second) maps[c].categories.push_back(label);
        }
    }
    return maps;
}

NumericMatrix encode_categoricals(const RawTable& table,
                                  const std::vector<CategoryMap>& maps) {
    if (maps.size() != table.schema.columns.size())
        throw UsageError("encode_categoricals: one map per column required");
    NumericMatrix out;
    out.rows = table.rows;
    out.cols = static_cast<std::int64_t>(table.schema.columns.size());
    out.values.assign(static_cast<std::size_t>(out.rows * out.cols), 0.0);
    for (std::int64_t r = 0; r < out.rows; ++r) {
        for (std::int64_t c = 0; c < out.cols; ++c) {
            const auto col = static_cast<std::size_t>(c);
            if (table.schema.columns[col].kind == ColumnKind::kNumeric)
                out.at(r, c) = table.numeric[col][static_cast<std::size_t>(r)];
            else
                out.at(r, c) = maps[col].code_of(table.labels[col][static_cast<std::size_t>(r)]);
        }
    }
    return out;
}

std::pair<NumericMatrix, Standardization> standardize(const NumericMatrix& matrix) {
    if (matrix.rows < 2) throw UsageError("standardize: need at least two rows");
    Standardization stats;
    stats.mean.assign(static_cast<std::size_t>(matrix.cols), 0.0);
    stats.stddev.assign(static_cast<std::size_t>(matrix.cols), 0.0);
    const auto n = static_cast<double>(matrix.rows);
    for (std::int64_t c = 0; c < matrix.cols; ++c) {
        double acc = 0.0;
        for (std::int64_t r = 0; r < matrix.rows; ++r) acc += matrix.at(r, c);
        const double mean = acc / n;
        double var = 0.0;
        for (std::int64_t r = 0; r < matrix.rows; ++r) {
            const double d = matrix.at(r, c) - mean;
            var += d * d;
        }
        var /= n;
        stats.mean[static_cast<std::size_t>(c)] = mean;
        stats.stddev[static_cast<std::size_t>(c)] = var > 0.0 ? std::sqrt(var) : 0.0;
    }
    return {apply_standardization(matrix, stats), std::move(stats)};
}

NumericMatrix apply_standardization(const NumericMatrix& matrix,
                                    const Standardization& stats) {
    if (static_cast<std::int64_t>(stats.mean.size()) != matrix.cols ||
        stats.stddev.size() != stats.mean.size())
        throw ShapeError("apply_standardization: column count mismatch");
    NumericMatrix out = matrix;
    for (std::int64_t r = 0; r < matrix.rows; ++r) {
        for (std::int64_t c = 0; c < matrix.cols; ++c) {
            const auto col = static_cast<std::size_t>(c);
            out.at(r, c) = stats.stddev[col] > 0.0
                               ? (matrix.at(r, c) - stats.mean[col]) / stats.stddev[col]
                               : 0.0;
        }
    }
    return out;
}

}  // namespace simlearn
