#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fnls/evolution/params.hpp"
#include "fnls/io/csv.hpp"
#include "fnls/spectral/field.hpp"

namespace fnls {

// Extra diagnostics sampled along a run, each becomes one CSV column.
struct DiagnosticsPlan {
  std::vector<double> sobolev;          // H^s norms, column "h_<s>"
  std::vector<double> sup_fractional;   // sup_x ||D|^s u|, column "winf_<s>"
  std::vector<int> modified_energy;     // totals of the order-n modified energy, column "menergy_<n>"
};

std::string sobolev_column(double s);
std::string sup_fractional_column(double s);
std::string modified_energy_column(int n);

struct RunColumn {
  std::string name;
  std::vector<double> values;
};

class RunRecord {
 public:
  RunRecord(EquationParams params, int m, double dt, double T);

  const EquationParams& params() const noexcept { return params_; }
  int points() const noexcept { return m_; }
  double dt() const noexcept { return dt_; }
  double requested_time() const noexcept { return T_; }

  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<double>& mass() const { return column("mass"); }
  const std::vector<double>& energy() const { return column("energy"); }
  const std::vector<double>& linf() const { return column("linf"); }
  const std::vector<RunColumn>& columns() const noexcept { return columns_; }

  bool has_column(const std::string& name) const noexcept;
  const std::vector<double>& column(const std::string& name) const;  // RecordError if absent
  std::size_t size() const noexcept { return times_.size(); }
  bool empty() const noexcept { return times_.empty(); }

  // Column names fixed by the first sample.
  void append(double t, const std::vector<std::pair<std::string, double>>& values);

  // Relative drift max_t |q(t) - q(0)| / |q(0)| of a column.
  double relative_drift(const std::string& name) const;

  const std::optional<SpectralField>& final_state() const noexcept { return final_; }
  void set_final_state(SpectralField u) { final_ = std::move(u); }

  CsvTable table() const;
  nlohmann::json metadata() const;
  // <stem>.csv and the sidecar <stem>.meta.json in dir.
  void write(const std::filesystem::path& dir, const std::string& stem) const;

 private:
  EquationParams params_;
  int m_;
  double dt_;
  double T_;
  std::vector<double> times_;
  std::vector<RunColumn> columns_;
  std::optional<SpectralField> final_;
};

}  // namespace fnls
