#include "simlearn/ingest/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "simlearn/core/errors.hpp"

namespace simlearn {

std::size_t TableSchema::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return i;
    throw UsageError("TableSchema: no column named '" + name + "'");
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_blank(s[b])) ++b;
    while (e > b && is_blank(s[e - 1])) --e;
    return s.substr(b, e - b);
}

/// Splits `text` into records of fields, tracking the line each record
/// starts on. Handles quoted fields, doubled-quote escapes and newlines
/// inside quotes; accepts LF and CRLF endings.
struct CsvReader {
    const std::string& text;
    const std::string& origin;
    std::size_t pos = 0;
    std::int64_t line = 1;

    explicit CsvReader(const std::string& t, const std::string& o) : text(t), origin(o) {}

    bool done() const { return pos >= text.size(); }

    [[noreturn]] void fail(const std::string& what, std::int64_t at_line) const {
        throw DataError(origin + ":" + std::to_string(at_line) + ": " + what);
    }

    /// Next record, or false at end of input. Skips nothing: blank lines
    /// parse as a single empty field and are handled by the caller.
    bool next_record(std::vector<std::string>& fields, std::int64_t& record_line) {
        if (done()) return false;
        record_line = line;
        fields.clear();
        std::string field;
        bool quoted = false;
        bool saw_quote = false;  // field had quotes; suppress trimming
        bool in_field = true;
        while (in_field) {
            if (quoted) {
                if (done()) fail("unterminated quoted field", record_line);
                const char c = text[pos++];
                if (c == '"') {
                    if (pos < text.size() && text[pos] == '"') {
                        field.push_back('"');
                        ++pos;
                    } else {
                        quoted = false;
                    }
                } else {
                    if (c == '\n') ++line;
                    field.push_back(c);
                }
                continue;
            }
            if (done()) {
                fields.push_back(saw_quote ? field : trim(field));
                break;
            }
            const char c = text[pos++];
            if (c == '"' && trim(field).empty() && !saw_quote) {
                quoted = true;
                saw_quote = true;
                field.clear();
            } else if (c == ',') {
                fields.push_back(saw_quote ? field : trim(field));
                field.clear();
                saw_quote = false;
            } else if (c == '\n' || c == '\r') {
                if (c == '\r' && pos < text.size() && text[pos] == '\n') ++pos;
                ++line;
                fields.push_back(saw_quote ? field : trim(field));
                in_field = false;
            } else {
                if (saw_quote && !is_blank(c))
                    fail("stray text after closing quote", line);
                if (!saw_quote) field.push_back(c);
            }
        }
        return true;
    }
};

double parse_number(const std::string& field, const CsvReader& reader,
                    std::int64_t record_line, const std::string& column) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        reader.fail("cannot parse '" + field + "' as a number in column '" + column + "'",
                    record_line);
    return value;
}

bool is_missing(const std::string& field) { return field.empty() || field == "?"; }

}  // namespace

RawTable parse_csv(const std::string& text, const TableSchema& schema,
                   const std::string& origin) {
    if (schema.columns.empty()) throw UsageError("parse_csv: schema has no columns");
    CsvReader reader(text, origin);
    std::vector<std::string> fields;
    std::int64_t record_line = 0;

    if (!reader.next_record(fields, record_line))
        throw DataError(origin + ": missing header row");
    if (fields.size() != schema.columns.size())
        reader.fail("header has " + std::to_string(fields.size()) + " columns, schema has " +
                        std::to_string(schema.columns.size()),
                    record_line);
    for (std::size_t c = 0; c < fields.size(); ++c)
        if (fields[c] != schema.columns[c].name)
            reader.fail("header column '" + fields[c] + "' does not match schema column '" +
                            schema.columns[c].name + "'",
                        record_line);

    RawTable table;
    table.schema = schema;
    table.numeric.resize(schema.columns.size());
    table.labels.resize(schema.columns.size());

    while (reader.next_record(fields, record_line)) {
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        if (fields.size() != schema.columns.size())
            reader.fail("record has " + std::to_string(fields.size()) +
                            " fields, expected " + std::to_string(schema.columns.size()),
                        record_line);
        bool missing = false;
        for (const auto& f : fields)
            if (is_missing(f)) {
                missing = true;
                break;
            }
        if (missing) {
            table.dropped_rows += 1;
            continue;
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (schema.columns[c].kind == ColumnKind::kNumeric)
                table.numeric[c].push_back(
                    parse_number(fields[c], reader, record_line, schema.columns[c].name));
            else
                table.labels[c].push_back(fields[c]);
        }
        table.rows += 1;
    }
    return table;
}

RawTable load_csv(const std::string& path, const TableSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("load_csv: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), schema, path);
}

}  // namespace simlearn
