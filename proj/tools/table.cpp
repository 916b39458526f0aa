#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace pdm::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string cell_text(const Cell& c, int precision, bool json) {
  struct Visitor {
    int precision;
    bool json;
    std::string operator()(std::monostate) const { return json ? "null" : ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const {
      if (json && !std::isfinite(d)) return "null";
      return format_number(d, precision);
    }
    std::string operator()(const std::string& s) const { return json ? json_string(s) : csv_field(s); }
  };
  return std::visit(Visitor{precision, json}, c);
}

void write_object(std::ostream& os, const std::vector<std::pair<std::string, Cell>>& kv, int precision) {
  os << '{';
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) os << ',';
    os << json_string(kv[i].first) << ':' << cell_text(kv[i].second, precision, true);
  }
  os << '}';
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", precision - 1, v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t, int precision) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i], precision, false);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t, int precision) {
  os << "{\n  \"command\": " << json_string(t.command) << ",\n  \"status\": " << json_string(t.status);
  if (!t.message.empty()) os << ",\n  \"message\": " << json_string(t.message);
  os << ",\n  \"parameters\": ";
  write_object(os, t.parameters, precision);
  os << ",\n  \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? ", " : "") << json_string(t.columns[i]);
  os << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? ",\n    " : "\n    ") << '{';
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) os << ',';
      os << json_string(t.columns[i]) << ':' << cell_text(t.rows[r][i], precision, true);
    }
    os << '}';
  }
  os << (t.rows.empty() ? "]" : "\n  ]");
  if (!t.summary.empty()) {
    os << ",\n  \"summary\": ";
    write_object(os, t.summary, precision);
  }
  os << "\n}\n";
}

void write_table(std::ostream& os, const Table& t, Format format, int precision) {
  if (format == Format::Csv) {
    write_csv(os, t, precision);
  } else {
    write_json(os, t, precision);
  }
}

}  // namespace pdm::cli
