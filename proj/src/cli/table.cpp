#include "ghost/table.hpp"

#include "ghost/errors.hpp"
#include "ghost/numeric.hpp"

#include <json.hpp>

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace ghost {

Cell Cell::number(double x) { return {format_double(x), true}; }
Cell Cell::integer(long long x) { return {std::to_string(x), true}; }
Cell Cell::string(std::string s) { return {std::move(s), false}; }

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row has " + std::to_string(row.size()) + " cells, table has " +
                               std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw DomainError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

namespace {

void write_field(std::ostream& out, std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') {
            out << '"';
        }
        out << c;
    }
    out << '"';
}

bool looks_numeric(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

void write_csv(std::ostream& out, const Table& t) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c > 0) {
            out << ',';
        }
        write_field(out, t.columns[c]);
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out << ',';
            }
            write_field(out, row[c].text);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& t) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c].numeric) {
                rec[t.columns[c]] = nlohmann::ordered_json::parse(row[c].text);
            } else {
                rec[t.columns[c]] = row[c].text;
            }
        }
        records.push_back(std::move(rec));
    }
    out << records.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& t, OutputFormat format) {
    if (format == OutputFormat::Json) {
        write_json(out, t);
    } else {
        write_csv(out, t);
    }
}

Table parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n') {
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) {
        throw DomainError("unterminated quoted CSV field");
    }
    if (any) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    if (records.empty()) {
        throw DomainError("CSV input has no header row");
    }

    Table t;
    t.columns = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        std::vector<Cell> row;
        for (auto& s : records[r]) {
            const bool numeric = looks_numeric(s);
            row.push_back({std::move(s), numeric});
        }
        if (row.size() != t.columns.size()) {
            throw DomainError("CSV row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                              " fields, header has " + std::to_string(t.columns.size()));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace ghost
