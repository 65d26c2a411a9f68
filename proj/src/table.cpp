#include "boxmode/table.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace boxmode {

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::invalid_argument("table row has " + std::to_string(row.size()) + " cells, expected " +
                                    std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

std::string format_number(double value, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits, value);
    return buf;
}

namespace {

std::string format_cell(const Cell& cell, int digits)
{
    if (const auto* i = std::get_if<std::int64_t>(&cell))
        return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell))
        return format_number(*d, digits);
    return std::get<std::string>(cell);
}

} // namespace

std::string format_csv(const Table& table, int digits)
{
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c)
            out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("table is not rectangular");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += format_cell(row[c], digits);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const Table& table, const std::filesystem::path& path, int digits)
{
    const auto text = format_csv(table, digits);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file)
        throw std::runtime_error("failed writing " + path.string());
}

} // namespace boxmode
