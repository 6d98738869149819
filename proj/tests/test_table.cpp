#include "doctest.h"

#include <stdexcept>
#include <string>

#include "vortexlab/table.hpp"

using namespace vortexlab;

TEST_CASE("rows and cell access") {
  Table t;
  t.columns = {{"r", Table::ColumnType::real}, {"k", Table::ColumnType::integer}};
  CHECK(t.rows() == 0);
  t.append_row({1.5, 3.0});
  t.append_row({-0.25, 7.0});
  CHECK(t.rows() == 2);
  CHECK(t.at(0, 0) == doctest::Approx(1.5));
  CHECK(t.at(1, 1) == doctest::Approx(7.0));
  CHECK_THROWS_AS(t.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(t.at(0, 2), std::out_of_range);
  CHECK_THROWS_AS(t.append_row({1.0}), std::invalid_argument);
}

TEST_CASE("format_double is fixed-width scientific with lowercase exponent") {
  CHECK(format_double(1.0) == "1.0000000000000000e+00");
  CHECK(format_double(-0.5) == "-5.0000000000000000e-01");
  CHECK(format_double(0.0) == "0.0000000000000000e+00");
  CHECK(format_double(9.2740100783e-24) == "9.2740100783000004e-24");
  // round-trip through 17 significant digits is lossless
  const double v = 0.1 + 0.2;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("csv rendering distinguishes integer and real columns") {
  Table t;
  t.columns = {{"index", Table::ColumnType::integer}, {"value", Table::ColumnType::real}};
  t.append_row({0.0, 0.5});
  t.append_row({1.0, -2.0});
  const std::string expect =
      "index,value\n"
      "0,5.0000000000000000e-01\n"
      "1,-2.0000000000000000e+00\n";
  CHECK(to_csv(t) == expect);
}

TEST_CASE("csv output is reproducible") {
  Table t;
  t.columns = {{"a", Table::ColumnType::real}};
  for (int i = 0; i < 20; ++i) t.append_row({i * 0.3721});
  CHECK(to_csv(t) == to_csv(t));
}
