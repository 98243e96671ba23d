#pragma once

#include <json.hpp>

namespace fnls {

// i u_t = |D|^alpha u + sign |u|^{2 sigma} u on the d-torus.
class EquationParams {
 public:
  EquationParams(int d, double alpha, int sigma = 1, int sign = 1);

  int d() const noexcept { return d_; }
  double alpha() const noexcept { return alpha_; }
  int sigma() const noexcept { return sigma_; }
  int sign() const noexcept { return sign_; }
  bool defocusing() const noexcept { return sign_ > 0; }

  nlohmann::json to_json() const;

 private:
  int d_;
  double alpha_;
  int sigma_;
  int sign_;
};

}  // namespace fnls
