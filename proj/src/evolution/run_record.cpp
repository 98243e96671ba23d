#include "fnls/evolution/run_record.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fnls/error.hpp"
#include "fnls/io/atomic_file.hpp"
#include "fnls/version.hpp"

namespace fnls {

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string sobolev_column(double s) { return "h_" + short_number(s); }
std::string sup_fractional_column(double s) { return "winf_" + short_number(s); }
std::string modified_energy_column(int n) { return "menergy_" + std::to_string(n); }

RunRecord::RunRecord(EquationParams params, int m, double dt, double T)
    : params_(params), m_(m), dt_(dt), T_(T) {}

bool RunRecord::has_column(const std::string& name) const noexcept {
  return std::any_of(columns_.begin(), columns_.end(), [&](const RunColumn& c) { return c.name == name; });
}

const std::vector<double>& RunRecord::column(const std::string& name) const {
  for (const auto& c : columns_)
    if (c.name == name) return c.values;
  throw RecordError("run record has no column '" + name + "'");
}

void RunRecord::append(double t, const std::vector<std::pair<std::string, double>>& values) {
  if (!times_.empty() && !(t > times_.back())) throw RecordError("sample times must increase strictly");
  if (times_.empty() && columns_.empty()) {
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (values[i].first == values[j].first) throw RecordError("duplicate column '" + values[i].first + "'");
    for (const auto& [name, v] : values) columns_.push_back({name, {}});
  }
  if (values.size() != columns_.size()) throw RecordError("sample does not match the record columns");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i].first != columns_[i].name) throw RecordError("sample column order changed");
  for (std::size_t i = 0; i < values.size(); ++i) columns_[i].values.push_back(values[i].second);
  times_.push_back(t);
}

double RunRecord::relative_drift(const std::string& name) const {
  const auto& v = column(name);
  if (v.empty()) throw RecordError("empty run record");
  const double ref = std::abs(v.front());
  double worst = 0.0;
  for (double x : v) worst = std::max(worst, std::abs(x - v.front()));
  return ref > 0.0 ? worst / ref : worst;
}

CsvTable RunRecord::table() const {
  std::vector<std::string> header{"t"};
  for (const auto& c : columns_) header.push_back(c.name);
  CsvTable out(header);
  for (std::size_t i = 0; i < times_.size(); ++i) {
    std::vector<double> row{times_[i]};
    for (const auto& c : columns_) row.push_back(c.values[i]);
    out.add_row(std::move(row));
  }
  return out;
}

nlohmann::json RunRecord::metadata() const {
  nlohmann::json cols = nlohmann::json::array();
  cols.push_back("t");
  for (const auto& c : columns_) cols.push_back(c.name);
  return {{"params", params_.to_json()},
          {"grid", {{"d", params_.d()}, {"m", m_}}},
          {"dt", dt_},
          {"T", T_},
          {"samples", times_.size()},
          {"t_final", times_.empty() ? 0.0 : times_.back()},
          {"columns", cols},
          {"version", kVersion}};
}

void RunRecord::write(const std::filesystem::path& dir, const std::string& stem) const {
  write_file_atomic(dir / (stem + ".csv"), table().str());
  write_file_atomic(dir / (stem + ".meta.json"), metadata().dump(2) + "\n");
}

}  // namespace fnls
