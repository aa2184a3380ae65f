#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simlearn {

enum class ColumnKind { kNumeric, kCategorical };

struct ColumnSchema {
    std::string name;
    ColumnKind kind = ColumnKind::kNumeric;
};

struct TableSchema {
    std::vector<ColumnSchema> columns;

    std::size_t column_index(const std::string& name) const;
};

/// Column-major parsed table. Exactly one of numeric[c] / labels[c] is
/// populated per column, matching the schema kind. Rows with any missing
/// field (empty or "?") are dropped and counted, not stored.
struct RawTable {
    TableSchema schema;
    std::vector<std::vector<double>> numeric;
    std::vector<std::vector<std::string>> labels;
    std::int64_t rows = 0;
    std::int64_t dropped_rows = 0;
};

/// Reads a comma-separated file with a mandatory header naming exactly the
/// schema columns in order. Quoted fields follow the usual CSV rules
/// (doubled quotes escape, newlines allowed inside quotes); unquoted fields
/// are trimmed of surrounding blanks. Unparseable numbers, wrong field
/// counts and header mismatches raise DataError with a line reference.
RawTable load_csv(const std::string& path, const TableSchema& schema);

/// Same parse from an in-memory string; `origin` names the source in errors.
RawTable parse_csv(const std::string& text, const TableSchema& schema,
                   const std::string& origin);

}  // namespace simlearn
