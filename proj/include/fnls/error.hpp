#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fnls {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or size mismatch between grids, samples and fields.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Negative power applied to a field with nonzero mean.
class SingularMultiplierError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested frequency block or product does not fit on the grid.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

// alpha == 1 has no dispersion and is rejected everywhere.
class HalfWaveExcludedError : public DomainError {
 public:
  explicit HalfWaveExcludedError(const std::string& where)
      : DomainError(where + ": alpha = 1 (half-wave equation) is excluded, it is not dispersive") {}
};

class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::vector<double> gaps)
      : Error(what), gaps_(std::move(gaps)) {}
  const std::vector<double>& gap_history() const noexcept { return gaps_; }

 private:
  std::vector<double> gaps_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class StiffnessError : public Error {
 public:
  using Error::Error;
};

// Fit window too short.
class SpanError : public Error {
 public:
  using Error::Error;
};

// Growth bound requested outside alpha > d.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Declared growth exponent of a driver disagrees with its measured one.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Run record lacks a required diagnostic column.
class RecordError : public Error {
 public:
  using Error::Error;
};

}  // namespace fnls
