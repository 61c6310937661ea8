#include "table.hpp"

#include <json.hpp>

#include <cstdio>

namespace fracdisc::cli {

std::string format_double(double value) {
    char buffer[32];
    const int n = std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return std::string(buffer, static_cast<std::size_t>(n));
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out << ',';
            }
            if (const auto* v = std::get_if<std::int64_t>(&row[i])) {
                out << *v;
            } else if (const auto* d = std::get_if<double>(&row[i])) {
                out << format_double(*d);
            }
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json object = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            if (const auto* v = std::get_if<std::int64_t>(&row[i])) {
                object[table.columns[i]] = *v;
            } else if (const auto* d = std::get_if<double>(&row[i])) {
                object[table.columns[i]] = *d;
            } else {
                object[table.columns[i]] = nullptr;
            }
        }
        rows.push_back(std::move(object));
    }
    out << rows.dump(2) << '\n';
}

}  // namespace fracdisc::cli
