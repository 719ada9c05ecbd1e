#pragma once
// Column tables emitted by the command-line tool.
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ghost {

struct Cell {
    std::string text;
    /// Numeric cells are emitted as JSON numbers, everything else as strings.
    bool numeric = false;

    static Cell number(double x);
    static Cell integer(long long x);
    static Cell string(std::string s);
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view name);

/// Header row, then one line per record; fields quoted only when they must be.
void write_csv(std::ostream& out, const Table& t);
/// Array of objects keyed by column name.
void write_json(std::ostream& out, const Table& t);
void write_table(std::ostream& out, const Table& t, OutputFormat format);

/// Inverse of write_csv. Cells that parse completely as numbers are marked numeric.
Table parse_csv(std::string_view text);

}  // namespace ghost
