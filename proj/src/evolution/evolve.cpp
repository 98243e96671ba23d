#include "fnls/evolution/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "fnls/energetics/conserved.hpp"
#include "fnls/energetics/modified_energy.hpp"
#include "fnls/evolution/propagate.hpp"
#include "fnls/spectral/multiplier.hpp"
#include "fnls/spectral/norms.hpp"
#include "fnls/spectral/transform.hpp"

namespace fnls {

std::vector<std::pair<std::string, double>> sample_diagnostics(const SpectralField& u, const EquationParams& p,
                                                               const DiagnosticsPlan& plan) {
  std::vector<std::pair<std::string, double>> out;
  // A norm requested twice is sampled once.
  auto seen = [&](const std::string& name) {
    return std::any_of(out.begin(), out.end(), [&](const auto& c) { return c.first == name; });
  };
  out.emplace_back("mass", mass(u));
  out.emplace_back("energy", energy(u, p.alpha(), p.sign(), p.sigma()));
  out.emplace_back("linf", synthesize(u).abs().maxCoeff());
  for (double s : plan.sobolev)
    if (!seen(sobolev_column(s))) out.emplace_back(sobolev_column(s), sobolev_norm(u, s));
  for (double s : plan.sup_fractional)
    if (!seen(sup_fractional_column(s)))
      out.emplace_back(sup_fractional_column(s), synthesize(apply_fractional_power(u, s)).abs().maxCoeff());
  for (int n : plan.modified_energy) {
    if (seen(modified_energy_column(n))) continue;
    const auto b = p.sigma() == 1 ? modified_energy(u, p.alpha(), n)
                                  : modified_energy_general(u, p.alpha(), n, p.sigma());
    out.emplace_back(modified_energy_column(n), b.total);
  }
  return out;
}

RunRecord evolve(const SpectralField& u0, double T, double dt, const EquationParams& params, int sample_every,
                 const DiagnosticsPlan& plan) {
  if (!(T > 0.0)) throw DomainError("evolve: T must be positive");
  if (!(dt > 0.0) || dt > T) throw DomainError("evolve: need 0 < dt <= T");
  if (sample_every < 1) throw DomainError("evolve: sample_every must be >= 1");
  const long long steps = std::max(1LL, std::llround(T / dt));

  RunRecord rec(params, u0.grid().points(), dt, T);
  const SplitStepper stepper(u0.grid(), dt, params);
  SpectralField u = u0;
  rec.append(0.0, sample_diagnostics(u, params, plan));
  double m_prev = mass(u);

  for (long long n = 1; n <= steps; ++n) {
    stepper.advance(u);
    const double t = n * dt;
    const double m_now = mass(u);
    if (!std::isfinite(m_now) || !u.coeff().allFinite())
      throw BlowUpError("evolve: non-finite state at t = " + std::to_string(t), t, rec);
    if (std::abs(m_now - m_prev) > 0.1 * m_prev)
      throw BlowUpError("evolve: mass jumped by more than 10% at t = " + std::to_string(t), t, rec);
    m_prev = m_now;
    if (n % sample_every == 0 || n == steps) rec.append(t, sample_diagnostics(u, params, plan));
  }
  rec.set_final_state(std::move(u));
  return rec;
}

}  // namespace fnls
