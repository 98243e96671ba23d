#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fnls {

// %.17g, round-trips every double.
std::string format_double(double v);

// Comma separated, header row, LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<double> row);
  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }

  void write(std::ostream& os) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace fnls
