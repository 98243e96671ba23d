#pragma once

#include <cstdint>

namespace fnls {

// Stateless splitmix64 stream: draw i depends only on (seed, i).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const noexcept;
  double uniform(std::uint64_t counter) const noexcept;   // [0, 1)
  double normal(std::uint64_t counter) const noexcept;    // Box-Muller on draws 2i, 2i+1

 private:
  std::uint64_t seed_;
};

}  // namespace fnls
