#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace fracdisc::cli {

/// Empty cells render as an empty CSV field or JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// %.17g: enough digits for every double to round-trip through text.
[[nodiscard]] std::string format_double(double value);

/// Header row, then one comma-separated row per entry, LF line endings.
void write_csv(const Table& table, std::ostream& out);

/// Array of row objects keyed by column name.
void write_json(const Table& table, std::ostream& out);

}  // namespace fracdisc::cli
