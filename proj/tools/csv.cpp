#include "csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rnls_cli {

namespace {

bool parse_double(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !s.empty();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Table& Table::add(std::string name, std::vector<double> values) {
  columns.push_back(Column{std::move(name), std::move(values), {}});
  return *this;
}

Table& Table::add_text(std::string name, std::vector<std::string> values) {
  columns.push_back(Column{std::move(name), {}, std::move(values)});
  return *this;
}

const Column& Table::operator[](const std::string& name) const {
  for (const auto& c : columns) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("csv: no column named '" + name + "'");
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const Table& table) {
  const std::size_t n = table.rows();
  for (const auto& c : table.columns) {
    if (c.size() != n) throw std::runtime_error("csv: column '" + c.name + "' has a different length");
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open " + path + " for writing");
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    out << (j ? "," : "") << table.columns[j].name;
  }
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      const auto& c = table.columns[j];
      if (j) out << ',';
      out << (c.is_text() ? c.text[i] : format_double(c.numbers[i]));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("csv: write to " + path + " failed");
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: " + path + " has no header");
  const auto names = split(line);
  std::vector<std::vector<std::string>> cells(names.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != names.size()) {
      throw std::runtime_error("csv: " + path + " line " + std::to_string(row) + " has " +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(names.size()));
    }
    for (std::size_t j = 0; j < fields.size(); ++j) cells[j].push_back(fields[j]);
  }
  Table t;
  for (std::size_t j = 0; j < names.size(); ++j) {
    std::vector<double> numbers(cells[j].size());
    bool numeric = true;
    for (std::size_t i = 0; i < cells[j].size() && numeric; ++i) {
      numeric = parse_double(cells[j][i], numbers[i]);
    }
    if (numeric) {
      t.add(names[j], std::move(numbers));
    } else {
      t.add_text(names[j], std::move(cells[j]));
    }
  }
  return t;
}

}  // namespace rnls_cli
