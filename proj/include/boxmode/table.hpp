#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace boxmode {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Rectangular table with a header row; the CSV payload of every subcommand.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Floats in scientific notation with `digits` digits after the point,
/// integers and strings verbatim, comma separated, "\n" after every record.
std::string format_csv(const Table& table, int digits);

/// Throws std::runtime_error naming the path when the file cannot be written.
void write_csv(const Table& table, const std::filesystem::path& path, int digits);

std::string format_number(double value, int digits);

} // namespace boxmode
