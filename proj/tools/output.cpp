#include "output.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace timcli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match header");
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec == std::errc{}) return std::string(buf.data(), end);
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return buf.data();
}

namespace {

std::string render(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << render(row[c]);
    }
    os << '\n';
  }
}

nlohmann::ordered_json to_json(const Table& table, const nlohmann::ordered_json& meta) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    auto column = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      std::visit([&](const auto& v) { column.push_back(v); }, row[c]);
    }
    rows[table.columns[c]] = std::move(column);
  }
  nlohmann::ordered_json doc;
  doc["meta"] = meta;
  doc["rows"] = std::move(rows);
  return doc;
}

void write_json(std::ostream& os, const Table& table, const nlohmann::ordered_json& meta) {
  os << to_json(table, meta).dump(2) << '\n';
}

Table table_from_json(const nlohmann::ordered_json& doc) {
  const auto& rows = doc.at("rows");
  Table table;
  std::size_t length = 0;
  for (const auto& [name, values] : rows.items()) {
    table.columns.push_back(name);
    length = values.size();
  }
  for (std::size_t r = 0; r < length; ++r) {
    std::vector<Cell> row;
    for (const auto& [name, values] : rows.items()) {
      const auto& v = values.at(r);
      if (v.is_string()) {
        row.emplace_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<long long>());
      } else {
        row.emplace_back(v.get<double>());
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace timcli
