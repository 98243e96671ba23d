#pragma once

#include <array>
#include <memory>

#include <Eigen/Core>

namespace fnls {

// Uniform grid on the d-torus [0, 2pi)^d with m points per axis.
// Flat indices are row-major, axis 0 slowest; the same flat index addresses
// the node x_j and the wrapped wave number k_j.
class TorusGrid {
 public:
  TorusGrid(int dim, int points_per_axis);

  int dim() const noexcept { return dim_; }
  int points() const noexcept { return m_; }
  Eigen::Index size() const noexcept { return size_; }
  double spacing() const noexcept;
  double cell_volume() const noexcept;
  double volume() const noexcept;

  // j < m/2 -> j, else j - m. The Nyquist index maps to -m/2.
  int wavenumber(int j) const noexcept { return j < m_ / 2 ? j : j - m_; }

  const Eigen::ArrayXd& k_squared() const noexcept;
  const Eigen::ArrayXd& k_component(int axis) const;

  std::array<int, 3> split(Eigen::Index flat) const noexcept;
  Eigen::Index flat(const std::array<int, 3>& j) const noexcept;
  // Flat index of the mode k; components outside [-m/2, m/2) are rejected.
  Eigen::Index mode_index(const std::array<int, 3>& k) const;
  std::array<int, 3> mode(Eigen::Index flat) const noexcept;
  double node(Eigen::Index flat, int axis) const noexcept;

  bool operator==(const TorusGrid& other) const noexcept {
    return dim_ == other.dim_ && m_ == other.m_;
  }

  struct Tables;

 private:
  int dim_;
  int m_;
  Eigen::Index size_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace fnls
