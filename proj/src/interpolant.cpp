#include "subadd/interpolant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subadd {

double Interpolant::operator()(double x) const {
  const double end = domain_end();
  if (!(x >= 1.0 && x <= end))
    throw std::domain_error("interpolant evaluated at " + std::to_string(x) + " outside [1, " +
                            std::to_string(knots_.size()) + "]");
  const double left = std::floor(x);
  const auto n = static_cast<std::size_t>(left);
  if (n >= knots_.size()) return knots_(knots_.size());
  if (x == left) return knots_(n);
  // Both weights are exact: x lies in [n, n + 1) with n >= 1.
  const double t = (left + 1.0) - x;
  const double s = x - left;
  return t * knots_(n) + s * knots_(n + 1);
}

std::vector<double> audit_grid(std::size_t n, double grid_step) {
  if (!(grid_step > 0.0) || !std::isfinite(grid_step))
    throw std::invalid_argument("grid step must be positive and finite");
  const double end = static_cast<double>(n);
  std::vector<double> grid;
  for (std::size_t k = 1; k <= n; ++k) grid.push_back(static_cast<double>(k));
  for (std::size_t k = 1;; ++k) {
    const double x = 1.0 + static_cast<double>(k) * grid_step;
    if (x > end) break;
    grid.push_back(x);
  }
  std::sort(grid.begin(), grid.end());
  // Subdivision points within rounding of a knot collapse onto the knot.
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) {
    if (!out.empty() && std::abs(x - out.back()) < 1e-12) {
      if (x == std::round(x)) out.back() = x;
      continue;
    }
    out.push_back(x);
  }
  return out;
}

AuditResult audit_subadditivity(const Interpolant& f, double grid_step, Tolerance tol) {
  const auto grid = audit_grid(f.knots().size(), grid_step);
  const double end = f.domain_end();
  AuditResult result;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double fx = f(x);
    for (std::size_t j = i; j < grid.size(); ++j) {
      const double y = grid[j];
      double sum = x + y;
      if (sum > end) {
        if (sum - end > 1e-12) break;
        sum = end;
      }
      const double deficit = f(sum) - fx - f(y);
      ++result.pairs_checked;
      if (!result.max_deficit || deficit > *result.max_deficit) {
        result.max_deficit = deficit;
        result.x = x;
        result.y = y;
      }
    }
  }
  result.holds = !result.max_deficit || tol.leq(*result.max_deficit, 0.0);
  return result;
}

MediantBounds mediant_bounds(double a1, double b1, double a2, double b2) {
  if (!(b1 > 0.0) || !(b2 > 0.0)) throw std::domain_error("mediant denominators must be positive");
  const double r1 = a1 / b1;
  const double r2 = a2 / b2;
  return {std::min(r1, r2), (a1 + a2) / (b1 + b2), std::max(r1, r2)};
}

RatioInfimum ratio_infimum(const Interpolant& f) {
  const Sequence& u = f.knots();
  RatioInfimum best{u(1), 1.0};
  for (std::size_t n = 2; n <= u.size(); ++n) {
    const double r = u(n) / static_cast<double>(n);
    if (r < best.value) best = {r, static_cast<double>(n)};
  }
  return best;
}

FeketeEstimate fekete_estimate(const Sequence& u, Tolerance tol) {
  FeketeEstimate est;
  est.ratios.reserve(u.size());
  for (std::size_t n = 1; n <= u.size(); ++n) est.ratios.push_back(u(n) / static_cast<double>(n));
  const auto it = std::min_element(est.ratios.begin(), est.ratios.end());
  est.prefix_inf = *it;
  est.prefix_argmin = static_cast<std::size_t>(it - est.ratios.begin()) + 1;
  est.last_ratio = est.ratios.back();
  est.gap = est.last_ratio - est.prefix_inf;
  est.subadditive = is_subadditive(u, tol).holds;
  return est;
}

}  // namespace subadd
