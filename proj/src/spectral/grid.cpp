#include "fnls/spectral/grid.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

#include "fnls/error.hpp"

namespace fnls {

struct TorusGrid::Tables {
  Eigen::ArrayXd ksq;
  std::array<Eigen::ArrayXd, 3> comp;
};

namespace {

std::shared_ptr<const TorusGrid::Tables> build_tables(int dim, int m, Eigen::Index size) {
  auto t = std::make_shared<TorusGrid::Tables>();
  t->ksq = Eigen::ArrayXd::Zero(size);
  for (int a = 0; a < dim; ++a) t->comp[a].resize(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    Eigen::Index rest = i;
    double ksq = 0.0;
    for (int a = dim - 1; a >= 0; --a) {
      const int j = static_cast<int>(rest % m);
      rest /= m;
      const int k = j < m / 2 ? j : j - m;
      t->comp[a](i) = k;
      ksq += double(k) * k;
    }
    t->ksq(i) = ksq;
  }
  return t;
}

// Tables are shared between all grids of the same shape.
std::shared_ptr<const TorusGrid::Tables> shared_tables(int dim, int m, Eigen::Index size) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const TorusGrid::Tables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dim, m}];
  if (!slot) slot = build_tables(dim, m, size);
  return slot;
}

}  // namespace

TorusGrid::TorusGrid(int dim, int points_per_axis) : dim_(dim), m_(points_per_axis) {
  if (dim < 1 || dim > 3)
    throw DimensionError("torus dimension must be 1, 2 or 3, got " + std::to_string(dim));
  if (m_ < 4 || !std::has_single_bit(static_cast<unsigned>(m_)))
    throw DimensionError("points per axis must be a power of two >= 4, got " + std::to_string(m_));
  size_ = 1;
  for (int a = 0; a < dim; ++a) size_ *= m_;
  if (size_ > (Eigen::Index{1} << 26))
    throw DimensionError("grid too large: " + std::to_string(size_) + " nodes");
  tables_ = shared_tables(dim_, m_, size_);
}

double TorusGrid::spacing() const noexcept { return 2.0 * std::numbers::pi / m_; }

double TorusGrid::cell_volume() const noexcept { return std::pow(spacing(), dim_); }

double TorusGrid::volume() const noexcept { return std::pow(2.0 * std::numbers::pi, dim_); }

const Eigen::ArrayXd& TorusGrid::k_squared() const noexcept { return tables_->ksq; }

const Eigen::ArrayXd& TorusGrid::k_component(int axis) const {
  if (axis < 0 || axis >= dim_)
    throw DimensionError("axis " + std::to_string(axis) + " out of range");
  return tables_->comp[axis];
}

std::array<int, 3> TorusGrid::split(Eigen::Index flat) const noexcept {
  std::array<int, 3> j{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    j[a] = static_cast<int>(flat % m_);
    flat /= m_;
  }
  return j;
}

Eigen::Index TorusGrid::flat(const std::array<int, 3>& j) const noexcept {
  Eigen::Index idx = 0;
  for (int a = 0; a < dim_; ++a) idx = idx * m_ + j[a];
  return idx;
}

Eigen::Index TorusGrid::mode_index(const std::array<int, 3>& k) const {
  std::array<int, 3> j{0, 0, 0};
  for (int a = 0; a < dim_; ++a) {
    if (k[a] < -m_ / 2 || k[a] >= m_ / 2)
      throw ResolutionError("wave number " + std::to_string(k[a]) + " not representable on m=" +
                            std::to_string(m_));
    j[a] = k[a] < 0 ? k[a] + m_ : k[a];
  }
  return flat(j);
}

std::array<int, 3> TorusGrid::mode(Eigen::Index flat) const noexcept {
  auto j = split(flat);
  for (int a = 0; a < dim_; ++a) j[a] = wavenumber(j[a]);
  return j;
}

double TorusGrid::node(Eigen::Index flat, int axis) const noexcept {
  return spacing() * split(flat)[axis];
}

}  // namespace fnls
