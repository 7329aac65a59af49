#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace timcli {

using Cell = std::variant<double, long long, std::string>;

/// Column-oriented result table shared by the CSV and JSON writers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Header line plus one line per row; LF endings, no trailing delimiter.
void write_csv(std::ostream& os, const Table& table);

/// {"meta": meta, "rows": {column: [values...], ...}}
nlohmann::ordered_json to_json(const Table& table, const nlohmann::ordered_json& meta);
void write_json(std::ostream& os, const Table& table, const nlohmann::ordered_json& meta);

/// Rebuilds a table from the `rows` member of a document produced by to_json.
Table table_from_json(const nlohmann::ordered_json& doc);

}  // namespace timcli
