#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fnls/error.hpp"
#include "fnls/evolution/params.hpp"
#include "fnls/evolution/run_record.hpp"

namespace fnls {

// Non-finite samples or a mass jump above 10% in one step.
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, double time, RunRecord partial)
      : Error(what), time_(time), partial_(std::move(partial)) {}
  double time() const noexcept { return time_; }
  const RunRecord& partial() const noexcept { return partial_; }

 private:
  double time_;
  RunRecord partial_;
};

// Diagnostics of one state: mass, energy, linf, then the plan's columns.
std::vector<std::pair<std::string, double>> sample_diagnostics(const SpectralField& u, const EquationParams& params,
                                                               const DiagnosticsPlan& plan);

// round(T/dt) Strang steps; samples at t = 0, every sample_every steps and at the end.
RunRecord evolve(const SpectralField& u0, double T, double dt, const EquationParams& params, int sample_every,
                 const DiagnosticsPlan& plan = {});

}  // namespace fnls
