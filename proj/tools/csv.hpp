#pragma once

#include <string>
#include <vector>

namespace rnls_cli {

/// One column of a CSV table: numeric unless `text` is non-empty.
struct Column {
  std::string name;
  std::vector<double> numbers;
  std::vector<std::string> text;

  bool is_text() const noexcept { return !text.empty(); }
  std::size_t size() const noexcept { return is_text() ? text.size() : numbers.size(); }
};

struct Table {
  std::vector<Column> columns;

  Table& add(std::string name, std::vector<double> values);
  Table& add_text(std::string name, std::vector<std::string> values);
  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
  /// Throws std::out_of_range for an unknown name.
  const Column& operator[](const std::string& name) const;
};

/// x with 17 significant digits (the %.17g form); parses back to exactly x.
std::string format_double(double x);

/// One header line, then one line per row. Numbers use format_double.
/// Throws std::runtime_error on unequal column lengths or an I/O failure.
void write_csv(const std::string& path, const Table& table);

/// Inverse of write_csv: a column is numeric when every cell parses as a double.
Table read_csv(const std::string& path);

}  // namespace rnls_cli
