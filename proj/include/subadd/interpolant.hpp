#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subadd/core.hpp"

namespace subadd {

/// Piecewise-linear function on [1, N] through the knots (n, u_n).
class Interpolant {
public:
  explicit Interpolant(Sequence knots) : knots_(std::move(knots)) {}

  const Sequence& knots() const noexcept { return knots_; }
  double domain_begin() const noexcept { return 1.0; }
  double domain_end() const noexcept { return static_cast<double>(knots_.size()); }

  /// f(x) = t u_n + (1 - t) u_{n+1} for x = t n + (1 - t)(n + 1).
  /// Returns the knot value bitwise at integer x. Throws std::domain_error
  /// outside [1, N].
  double operator()(double x) const;

private:
  Sequence knots_;
};

struct AuditResult {
  bool holds = true;
  /// Largest f(x + y) - f(x) - f(y) seen on the grid, with its
  /// lexicographically smallest argmax (x <= y). Empty when no pair fits
  /// (N < 2).
  std::optional<double> max_deficit;
  double x = 0.0;
  double y = 0.0;
  std::size_t pairs_checked = 0;
};

/// Abscissae used by the audit: 1, 1 + step, 1 + 2 step, ... merged with every
/// integer knot, sorted and deduplicated. Throws std::invalid_argument for a
/// non-positive or non-finite step.
std::vector<double> audit_grid(std::size_t n, double grid_step);

/// Grid search for violations of f(x + y) <= f(x) + f(y) over all grid pairs
/// with x + y <= N.
AuditResult audit_subadditivity(const Interpolant& f, double grid_step, Tolerance tol = {});

struct MediantBounds {
  double low;
  double mid;
  double high;
};

/// (min(a1/b1, a2/b2), (a1 + a2)/(b1 + b2), max(a1/b1, a2/b2)).
/// Throws std::domain_error unless b1 > 0 and b2 > 0.
MediantBounds mediant_bounds(double a1, double b1, double a2, double b2);

struct RatioInfimum {
  double value;
  double argmin;
};

/// inf_{x in [1, N]} f(x)/x. The ratio of an affine segment to x is
/// extremal at the segment ends, so this is min_n u_n / n; argmin is the
/// smallest minimising knot.
RatioInfimum ratio_infimum(const Interpolant& f);

struct FeketeEstimate {
  std::vector<double> ratios;      ///< u_n / n, n = 1..N
  double prefix_inf = 0.0;         ///< min of ratios
  std::size_t prefix_argmin = 1;   ///< smallest n attaining prefix_inf
  double last_ratio = 0.0;         ///< u_N / N
  double gap = 0.0;                ///< last_ratio - prefix_inf
  bool subadditive = false;
};

/// Prefix diagnostics for the limit of u_n / n. For a subadditive input the
/// limit equals the infimum over all n, which prefix_inf bounds from above.
FeketeEstimate fekete_estimate(const Sequence& u, Tolerance tol = {});

}  // namespace subadd
