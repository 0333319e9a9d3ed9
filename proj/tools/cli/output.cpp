#include "cli/output.hpp"

#include <cstdio>
#include "json.hpp"

namespace qwalk::cli {

namespace {

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return quote_csv(s); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << quote_csv(table.columns[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
  for (const auto& [key, value] : table.summary) os << "# " << key << '=' << cell_text(value) << '\n';
}

void write_json(std::ostream& os, const Table& table) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      obj[table.columns[i]] = cell_json(row[i]);
    }
    doc.push_back(std::move(obj));
  }
  if (!table.summary.empty()) {
    auto summary = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.summary) summary[key] = cell_json(value);
    doc.push_back({{"summary", std::move(summary)}});
  }
  os << doc.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& table, Format format) {
  if (format == Format::kJson) {
    write_json(os, table);
  } else {
    write_csv(os, table);
  }
}

}  // namespace qwalk::cli
