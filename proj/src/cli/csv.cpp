#include "chancap/cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace chancap::cli {

std::size_t Table::rows() const {
    if (!text.empty()) return text.front().size();
    if (!numeric.empty()) return numeric.front().size();
    return 0;
}

std::string format_cell(const Cell& cell) {
    if (!cell || std::isnan(*cell)) return "nan";
    if (std::isinf(*cell)) return *cell > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), *cell, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("csv: number formatting failed");
    return std::string(buf.data(), end);
}

namespace {

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

void write_csv(std::ostream& out, const Table& table) {
    if (table.headers.size() != table.text.size() + table.numeric.size()) {
        throw std::logic_error("csv: header count does not match column count");
    }
    const std::size_t rows = table.rows();
    for (const auto& col : table.text) {
        if (col.size() != rows) throw std::logic_error("csv: ragged text column");
    }
    for (const auto& col : table.numeric) {
        if (col.size() != rows) throw std::logic_error("csv: ragged numeric column");
    }
    for (std::size_t c = 0; c < table.headers.size(); ++c) {
        if (c) out << ',';
        out << quote(table.headers[c]);
    }
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        bool first = true;
        for (const auto& col : table.text) {
            if (!first) out << ',';
            out << quote(col[r]);
            first = false;
        }
        for (const auto& col : table.numeric) {
            if (!first) out << ',';
            out << format_cell(col[r]);
            first = false;
        }
        out << '\n';
    }
}

void write_csv(const std::filesystem::path& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_csv(out, table);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace chancap::cli
