#include "vortexlab/table.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vortexlab {

void Table::append_row(std::initializer_list<double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("Table: row width does not match column count");
  cells.insert(cells.end(), row.begin(), row.end());
}

double Table::at(std::size_t row, std::size_t col) const {
  if (col >= columns.size() || row >= rows()) throw std::out_of_range("Table: cell out of range");
  return cells[row * columns.size() + col];
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) os << ',';
    os << t.columns[c].name;
  }
  os << '\n';
  const std::size_t n = t.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) os << ',';
      const double v = t.at(r, c);
      if (t.columns[c].type == Table::ColumnType::integer)
        os << static_cast<long long>(v);
      else
        os << format_double(v);
    }
    os << '\n';
  }
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  write_csv(t, os);
  return os.str();
}

}  // namespace vortexlab
