#pragma once

#include <cstdint>
#include <limits>

namespace oco {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

// Counter-based 64-bit stream: the i-th draw is mix64(key + i * golden). Streams split by
// hashing a child index into a fresh key, so parallel trials replay independently.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept;

  Rng split(std::uint64_t child) const noexcept;

  // Uniform on the open interval (0, 1).
  double uniform() noexcept;
  // Standard normal by Box-Muller; the second variate of each pair is cached.
  double normal() noexcept;
  // Gamma(shape, 1) by Marsaglia-Tsang, with the U^{1/shape} boost for shape < 1.
  double gamma(double shape) noexcept;
  double rademacher() noexcept { return ((*this)() >> 63) ? 1.0 : -1.0; }
  std::uint64_t below(std::uint64_t n) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace oco
