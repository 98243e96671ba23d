#include "fnls/io/csv.hpp"

#include <cstdio>
#include <sstream>

#include "fnls/error.hpp"

namespace fnls {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<double> row) {
  if (row.size() != header_.size())
    throw DimensionError("csv row has " + std::to_string(row.size()) + " fields, header has " +
                         std::to_string(header_.size()));
  rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const {
  for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
  os << '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_double(r[i]);
    os << '\n';
  }
}

std::string CsvTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

}  // namespace fnls
