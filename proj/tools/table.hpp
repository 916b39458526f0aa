#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pdm::cli {

// One output cell. monostate is a missing value: an empty CSV field, JSON null.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

enum class Format { Csv, Json };

/// A command's result: a column-major header plus rows, with optional metadata that only
/// the JSON encoding carries (CSV keeps a single header row and nothing else).
struct Table {
  std::string command;
  std::string status = "ok";
  std::string message;
  std::vector<std::pair<std::string, Cell>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;

  void add_row(std::vector<Cell> row);
};

/// Scientific notation with `precision` significant digits; non-finite values become
/// "nan", "inf" or "-inf" in CSV and null in JSON.
std::string format_number(double v, int precision);

void write_csv(std::ostream& os, const Table& t, int precision);
void write_json(std::ostream& os, const Table& t, int precision);
void write_table(std::ostream& os, const Table& t, Format format, int precision);

}  // namespace pdm::cli
