#include "fnls/growth/accumulation.hpp"

#include <cmath>

#include "fnls/error.hpp"

namespace fnls {

void AccumulationConfig::validate() const {
  if (!(p > 1.0)) throw SpecError("accumulation: p must exceed 1");
  if (!(gamma > gamma0)) throw SpecError("accumulation: gamma must exceed gamma0");
  if (!(b > 0.5 && b < 1.0)) throw SpecError("accumulation: b must lie in (1/2, 1)");
  if (!(1.0 - b - b_prime > 0.0)) throw SpecError("accumulation: need b + b' < 1");
  if (!(A >= 0.0)) throw SpecError("accumulation: A must be >= 0");
}

double AccumulationConfig::reference_exponent() const { return 1.0 + A + 2.0 * A / (1.0 - b - b_prime); }

nlohmann::json AccumulationResult::summary() const {
  return {{"exponent", fit.exponent},
          {"residual", fit.residual},
          {"reference", reference},
          {"within_reference", fit.exponent <= reference}};
}

AccumulationResult strichartz_accumulation(std::span<const double> times, std::span<const double> w,
                                           const AccumulationConfig& acc, double burn_in) {
  acc.validate();
  if (times.size() != w.size()) throw RecordError("accumulation: times and samples differ in length");
  if (times.size() < 2 || !(times.back() > times.front())) throw RecordError("accumulation: empty time range");
  const double q = 2.0 * acc.p;
  AccumulationResult r;
  r.reference = acc.reference_exponent();
  double integral = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    integral += 0.5 * (times[i] - times[i - 1]) * (std::pow(w[i - 1], q) + std::pow(w[i], q));
    r.horizons.push_back(times[i]);
    r.cumulative.push_back(std::pow(integral, 1.0 / q));
  }
  r.fit = fit_growth_exponent(r.horizons, r.cumulative, burn_in);
  return r;
}

AccumulationResult strichartz_accumulation(const RunRecord& record, const AccumulationConfig& acc,
                                           double burn_in) {
  acc.validate();
  const auto& w = record.column(sup_fractional_column(acc.gamma - acc.gamma0));
  return strichartz_accumulation(record.times(), w, acc, burn_in);
}

}  // namespace fnls
