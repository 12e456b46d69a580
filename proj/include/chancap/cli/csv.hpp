// csv.hpp - CSV emission with 17 significant digits and '\n' line endings.

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace chancap::cli {

using Cell = std::optional<double>;  // nullopt is written as "nan"

// Column-oriented table; every column has one cell per row.
struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<Cell>> numeric;       // numeric columns, same order as headers
    std::vector<std::vector<std::string>> text;   // optional leading text columns

    std::size_t rows() const;
};

std::string format_cell(const Cell& cell);

void write_csv(std::ostream& out, const Table& table);
void write_csv(const std::filesystem::path& path, const Table& table);

} // namespace chancap::cli
