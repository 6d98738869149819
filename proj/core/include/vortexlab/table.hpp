#pragma once

// Minimal typed table for deterministic exports. Cells are stored as
// doubles; integer columns are rendered without a decimal point and must
// hold exactly representable values.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace vortexlab {

struct Table {
  enum class ColumnType { real, integer };

  struct Column {
    std::string name;
    ColumnType type = ColumnType::real;
  };

  std::vector<Column> columns;
  std::vector<double> cells;  // row-major

  std::size_t rows() const { return columns.empty() ? 0 : cells.size() / columns.size(); }
  void append_row(std::initializer_list<double> row);
  double at(std::size_t row, std::size_t col) const;
};

// Scientific notation, 17 significant digits, lowercase exponent. The fixed
// width makes reruns byte-identical.
std::string format_double(double v);

void write_csv(const Table& t, std::ostream& os);
std::string to_csv(const Table& t);

}  // namespace vortexlab
