#include "fnls/evolution/params.hpp"

#include <string>

#include "fnls/error.hpp"

namespace fnls {

EquationParams::EquationParams(int d, double alpha, int sigma, int sign)
    : d_(d), alpha_(alpha), sigma_(sigma), sign_(sign) {
  if (d < 1 || d > 3) throw DimensionError("equation dimension must be 1, 2 or 3");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive, got " + std::to_string(alpha));
  if (alpha == 1.0) throw HalfWaveExcludedError("EquationParams");
  if (sigma < 1) throw DomainError("sigma must be a positive integer");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 (defocusing) or -1 (focusing)");
}

nlohmann::json EquationParams::to_json() const {
  return {{"d", d_}, {"alpha", alpha_}, {"sigma", sigma_}, {"sign", sign_}};
}

}  // namespace fnls
