#pragma once

#include <optional>

#include "subadd/core.hpp"

namespace subadd {

enum class Parity { even, odd };

struct MeanHeight {
  double mean;
  /// max_{i != j} |u_i - u_j|; empty for N = 1 where no pair exists.
  std::optional<double> height;
};

MeanHeight mean_and_height(const Sequence& u);

/// |mean - u_i| <= height for every i. Holds for every sequence; false only
/// for N = 1 where the height is undefined.
bool ostrowski_check(const Sequence& u, Tolerance tol = {});

struct BoundsReport {
  double mean = 0.0;
  std::optional<double> height;
  /// Hermite-Hadamard type bracket of the mean; empty for N = 1.
  std::optional<double> hh_lower;
  std::optional<double> hh_upper;
  Parity parity = Parity::odd;
  bool subadditive = false;
  /// hh_lower <= mean <= hh_upper within tolerance. Only meaningful when
  /// `subadditive` is set; the bracket is not claimed otherwise.
  bool bracket_holds = false;
};

/// Even N: lower = ((N + 2) u_N - 2 u_{N/2}) / (2N)
/// Odd N:  lower = (N + 1) u_N / (2N)
/// Both:   upper = (N + 1) u_1 / 2
BoundsReport hermite_hadamard_bounds(const Sequence& u, Tolerance tol = {});

}  // namespace subadd
