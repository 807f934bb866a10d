#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace subadd {

/// Finite real sequence u_1..u_N, N >= 1.
///
/// Indices passed to operator() and at() are 1-based to match the usual
/// mathematical notation; values() exposes the 0-based storage.
class Sequence {
public:
  /// Throws std::invalid_argument when `values` is empty or holds a
  /// non-finite entry.
  explicit Sequence(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }

  /// u_i, unchecked. 1 <= i <= size().
  double operator()(std::size_t i) const noexcept { return values_[i - 1]; }

  /// u_i, throws std::out_of_range outside 1..size().
  double at(std::size_t i) const;

  std::span<const double> values() const noexcept { return values_; }

  double min() const noexcept;
  double max() const noexcept;

  friend bool operator==(const Sequence&, const Sequence&) = default;

private:
  std::vector<double> values_;
};

/// Absolute slack used by every inequality test in the library:
/// x <= y is accepted iff x <= y + abs_tol.
struct Tolerance {
  double abs_tol = 1e-9;

  /// Throws std::invalid_argument for negative or non-finite slack.
  static Tolerance absolute(double abs_tol);

  bool leq(double x, double y) const noexcept { return x <= y + abs_tol; }
};

struct IndexPair {
  std::size_t m = 0;
  std::size_t n = 0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct SubadditivityCheck {
  bool holds = true;
  /// First violating pair in (m + n, m) order, set iff !holds.
  std::optional<IndexPair> violation;

  explicit operator bool() const noexcept { return holds; }
};

/// Exhaustive O(N^2) test of u_{m+n} <= u_m + u_n over all m + n <= N.
///
/// Pairs are scanned by increasing m + n and then increasing m, so the
/// reported violation (m, n) always has m <= n and the prefix of length
/// m + n - 1 is subadditive.
SubadditivityCheck is_subadditive(const Sequence& u, Tolerance tol = {});

/// u_i >= 0 for all i and u_{i+1} <= u_i.
bool is_nonneg_decreasing(const Sequence& u);

/// u_n - u_m <= u_{n-m} for all n > m >= 1.
bool difference_bound_holds(const Sequence& u, Tolerance tol = {});

/// Shifts a 0-indexed sequence with implicit u_0 = 0 onto the 1-based
/// convention by prepending the zero term.
Sequence prepend_zero(const Sequence& u);

}  // namespace subadd
