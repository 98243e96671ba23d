#pragma once

#include <vector>

#include <json.hpp>

#include "fnls/io/csv.hpp"
#include "fnls/spectral/field.hpp"

namespace fnls {

// Coefficients 1 on N <= |k| <= 2N, 0 elsewhere. Requires m/2 > 2N.
SpectralField sharpness_wavepacket(int N, const TorusGrid& grid);

// || e^{-it|D|^alpha} f ||_{L^{2p}([0,1]; L^inf)} / ||f||_{L^2}, the time
// norm by the trapezoidal rule on `intervals` equal steps of [0, 1].
double strichartz_quotient(const SpectralField& f, double alpha, double p, int intervals);

struct StrichartzOptions {
  int initial_intervals = 1024;
  double rel_change = 0.005;
  int max_intervals = 1 << 16;
};

struct StrichartzValue {
  double quotient = 0.0;
  double l2 = 0.0;
  int intervals = 0;
};

// Doubles the partition, reusing samples, until successive quotients differ
// by less than rel_change.
StrichartzValue strichartz_quotient_refined(const SpectralField& f, double alpha, double p,
                                            const StrichartzOptions& opt = {});

struct StrichartzScaling {
  double alpha = 0.0;
  double p = 0.0;
  int d = 0;
  std::vector<int> Ns;
  std::vector<StrichartzValue> values;
  double slope = 0.0;
  double residual = 0.0;
  double predicted = 0.0;
};

// Quotients of annulus wavepackets over N (at least four) and the log-log slope.
StrichartzScaling strichartz_scaling(double alpha, double p, int d, const std::vector<int>& Ns,
                                     const StrichartzOptions& opt = {});

CsvTable strichartz_table(const StrichartzScaling& s);
nlohmann::json strichartz_summary(const StrichartzScaling& s);

}  // namespace fnls
