#pragma once

#include <vector>

#include <json.hpp>

#include "fnls/io/csv.hpp"

namespace fnls {

struct EnvelopeSample {
  int N = 0;
  double t = 0.0;
  double sup_kappa = 0.0;
  double omega = 0.0;
  double ratio = 0.0;
};

struct EnvelopeReport {
  double alpha = 0.0;
  int d = 0;
  std::vector<EnvelopeSample> samples;
  std::vector<int> Ns;
  std::vector<double> max_ratio;  // per entry of Ns
  double slope = 0.0;             // log(max ratio) vs log N
  double residual = 0.0;
};

// Per-N time grid: `points` log-spaced instants in (lower_factor * N^-alpha, 1].
struct LogTimeGrid {
  int points = 64;
  double lower_factor = 0.25;

  std::vector<double> instants(int N, double alpha) const;
};

// sup over nodes of |kappa_N(., t)| against omega_N(t) for every (N, t).
// Each N is evaluated on m = kernel_grid_points(N) points per axis.
EnvelopeReport envelope_certificate(const std::vector<int>& Ns, double alpha, int d,
                                    const std::vector<double>& t_grid);
EnvelopeReport envelope_certificate(const std::vector<int>& Ns, double alpha, int d,
                                    const LogTimeGrid& t_grid);

// Columns N, t, sup_kappa, omega, ratio.
CsvTable envelope_table(const EnvelopeReport& report);
nlohmann::json envelope_summary(const EnvelopeReport& report);

}  // namespace fnls
