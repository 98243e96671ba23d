#include "fnls/util/line_fit.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "fnls/error.hpp"

namespace fnls {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("fit_line: x and y differ in length");
  if (x.size() < 2) throw SpanError("fit_line: need at least two points");
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, 0) = x[i];
    a(i, 1) = 1.0;
    b(i) = y[i];
  }
  const Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd r = a * c - b;
  return {c(0), c(1), std::sqrt(r.squaredNorm() / n)};
}

}  // namespace fnls
