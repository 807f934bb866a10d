#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subadd/core.hpp"

namespace subadd {

/// SplitMix64: state += 0x9e3779b97f4a7c15, then the usual xor-shift-multiply
/// finaliser. Output is identical on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept;

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) noexcept;

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept;

private:
  std::uint64_t state_;
};

enum class Family {
  subadditive_envelope,  ///< envelope of uniform noise in [low, high]
  concave_sampled,       ///< a * n^exponent + b, 0 < exponent <= 1, a, b >= 0
  affine,                ///< a * n + b
  nonneg_decreasing,     ///< sorted uniform draws in [max(low, 0), high]
  exact_periodic,        ///< `pattern` (or a random one of length `period`) tiled
  periodic_plus_noise,   ///< exact_periodic plus uniform noise in [-noise, noise]
  uniform_random,        ///< uniform in [low, high]
};

std::string_view family_name(Family f) noexcept;
/// Throws std::invalid_argument for unknown names.
Family family_from_name(std::string_view name);

struct GeneratorSpec {
  Family family = Family::uniform_random;
  std::size_t length = 1;
  std::uint64_t seed = 0;
  double a = 1.0;
  double b = 0.0;
  double exponent = 0.5;
  std::size_t period = 1;
  double noise = 0.0;
  double low = -1.0;
  double high = 1.0;
  std::vector<double> pattern;
};

/// Deterministic in `spec`. Throws std::invalid_argument for invalid
/// parameters (length 0, period outside [1, length), low > high, ...).
Sequence generate(const GeneratorSpec& spec);

}  // namespace subadd
