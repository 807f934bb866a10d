#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "subadd/core.hpp"
#include "subadd/interpolant.hpp"

namespace subadd {

/// The L subsequences <u_{i + kL}>_{k >= 0}, i = 1..L.
struct ResidueClasses {
  std::size_t period = 1;
  std::vector<std::vector<double>> classes;
};

/// Throws std::domain_error unless 1 <= period <= N - 1.
ResidueClasses split_residue_classes(const Sequence& u, std::size_t period);

/// Ordered merger: position i + kL receives element k of class i.
/// Throws std::invalid_argument when the class lengths cannot come from a
/// split (lengths must be non-increasing and differ by at most one).
Sequence merge_classes(const ResidueClasses& classes);

/// Values tagged with their (1-based, ascending) positions in a parent
/// sequence.
struct TaggedSubsequence {
  std::vector<std::size_t> indices;
  std::vector<double> values;
};

/// No value of `a` occurs in `b` (within tolerance).
bool distinct(const TaggedSubsequence& a, const TaggedSubsequence& b, Tolerance tol = {});

/// Every value of `inner` occurs among the values of `outer`.
bool included(std::span<const double> inner, std::span<const double> outer, Tolerance tol = {});

/// Places each tagged value at its index. The tags must cover 1..N exactly
/// once; throws std::invalid_argument otherwise.
Sequence ordered_merge(std::span<const TaggedSubsequence> parts);

struct EpsilonForPeriod {
  double epsilon;
  std::size_t worst_class;  ///< smallest i attaining the largest class spread
};

/// Least epsilon with |u_{i+kL} - u_i| <= epsilon for all valid shifts:
/// the largest spread (max - min) over the residue classes.
EpsilonForPeriod epsilon_for_period(const Sequence& u, std::size_t period);

/// epsilon_for_period(u, L) <= abs_tol. L = N counts as not periodic.
bool is_periodic(const Sequence& u, std::size_t period, Tolerance tol = {});

struct PeriodicityReport {
  std::size_t period = 1;
  double epsilon = 0.0;
  Sequence periodic;   ///< midrange of each residue class, tiled
  Sequence residual;   ///< u - periodic
  double max_residual = 0.0;
};

/// Splits u into an exactly L-periodic part and a residual with
/// max |r_i| <= epsilon / 2, up to half an ulp of the values when the exact
/// midrange is not representable.
PeriodicityReport decompose(const Sequence& u, std::size_t period);

enum class ConverseStatus {
  holds,
  exceeds,             ///< measured epsilon of v + r above the bound
  v_not_periodic,
  residual_too_large,  ///< max |r| > epsilon / 2
  length_mismatch,
};

struct ConverseCheck {
  ConverseStatus status = ConverseStatus::holds;
  double measured_epsilon = 0.0;

  bool holds() const noexcept { return status == ConverseStatus::holds; }
};

/// Given an L-periodic v and a residual with max |r| <= epsilon / 2, checks
/// that u = v + r is epsilon-periodic with period L.
ConverseCheck verify_converse_stability(const Sequence& v, const Sequence& r,
                                        std::size_t period, double epsilon,
                                        Tolerance tol = {});

/// Same, taking epsilon = 2 max |r|.
ConverseCheck verify_converse_stability(const Sequence& v, const Sequence& r,
                                        std::size_t period, Tolerance tol = {});

/// Piecewise-linear interpolant of an L-periodic sequence; it satisfies
/// f(x + L) = f(x). Throws std::invalid_argument for non-periodic input.
Interpolant periodic_interpolant(const Sequence& u, std::size_t period, Tolerance tol = {});

/// S_0 = 0, S_n = u_1 + ... + u_n; size N + 1.
std::vector<double> partial_sums(const Sequence& u);

struct PartialSumProfile {
  std::size_t period = 1;
  /// profiles[i - 1][n - 1] = S_{i + (n-1)L} - S_{(n-1)L}, truncated where
  /// i + (n-1)L > N.
  std::vector<std::vector<double>> profiles;
  std::vector<bool> constant;
  bool all_constant = true;
};

PartialSumProfile partial_sum_profile(const Sequence& u, std::size_t period, Tolerance tol = {});

struct ConstantPiece {
  double value;
  std::vector<std::size_t> classes;  ///< residue classes merged into this piece
  TaggedSubsequence elements;
};

struct ConstantPartition {
  std::vector<ConstantPiece> pieces;  ///< pieces.size() <= L
  /// First residue class that is not constant; set iff the split failed.
  std::optional<std::size_t> failing_class;

  explicit operator bool() const noexcept { return !failing_class.has_value(); }
};

/// Splits u into residue classes and, when all are constant, merges the
/// classes sharing a value. Succeeds iff u is L-periodic. A merged piece's
/// value is the mean of its class constants.
ConstantPartition constant_partition(const Sequence& u, std::size_t period, Tolerance tol = {});

struct PeriodScanEntry {
  std::size_t period;
  double epsilon;
};

struct PeriodScan {
  std::vector<PeriodScanEntry> entries;  ///< L = 1..max_period ascending
  /// Smallest L with epsilon(L) <= threshold.
  std::optional<std::size_t> best_period;
};

/// epsilon(L) for L = 1..floor(N/2) (at least L = 1 when N >= 2).
/// Throws std::domain_error for N = 1.
PeriodScan scan_periods(const Sequence& u, double max_epsilon);

}  // namespace subadd
