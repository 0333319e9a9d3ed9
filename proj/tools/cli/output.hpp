#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cli/config.hpp"

namespace qwalk::cli {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

/// Rows with a fixed column schema plus optional summary records.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

/// 17 significant digits, so values round-trip exactly.
std::string format_number(double x);

/// RFC 4180 style with a header row; summary records follow as "# key=value" lines.
void write_csv(std::ostream& os, const Table& table);

/// Array of row objects; summary, if any, as a trailing {"summary": {...}} element.
void write_json(std::ostream& os, const Table& table);

void write_table(std::ostream& os, const Table& table, Format format);

}  // namespace qwalk::cli
