#include "subadd/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subadd {
namespace {

void require_period(const Sequence& u, std::size_t period) {
  if (period < 1 || period >= u.size())
    throw std::domain_error("period " + std::to_string(period) + " outside [1, " +
                            std::to_string(u.size() == 0 ? 0 : u.size() - 1) + "]");
}

struct Range {
  double lo;
  double hi;
};

Range class_range(const Sequence& u, std::size_t period, std::size_t i) {
  Range r{u(i), u(i)};
  for (std::size_t n = i + period; n <= u.size(); n += period) {
    r.lo = std::min(r.lo, u(n));
    r.hi = std::max(r.hi, u(n));
  }
  return r;
}

double max_abs(const Sequence& s) {
  double m = 0.0;
  for (double x : s.values()) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

ResidueClasses split_residue_classes(const Sequence& u, std::size_t period) {
  require_period(u, period);
  ResidueClasses out{period, std::vector<std::vector<double>>(period)};
  for (std::size_t n = 1; n <= u.size(); ++n) out.classes[(n - 1) % period].push_back(u(n));
  return out;
}

Sequence merge_classes(const ResidueClasses& rc) {
  if (rc.period == 0 || rc.classes.size() != rc.period)
    throw std::invalid_argument("class count does not match the period");
  const std::size_t rows = rc.classes.front().size();
  std::size_t total = 0;
  for (std::size_t i = 0; i < rc.period; ++i) {
    const std::size_t len = rc.classes[i].size();
    const bool full_row = len == rows;
    const bool ragged = rows > 0 && len + 1 == rows;
    if (!full_row && !ragged) throw std::invalid_argument("inconsistent residue class lengths");
    if (i > 0 && len > rc.classes[i - 1].size())
      throw std::invalid_argument("residue class lengths must be non-increasing");
    total += len;
  }
  std::vector<double> out(total);
  for (std::size_t i = 0; i < rc.period; ++i)
    for (std::size_t k = 0; k < rc.classes[i].size(); ++k) out[i + k * rc.period] = rc.classes[i][k];
  return Sequence(std::move(out));
}

bool distinct(const TaggedSubsequence& a, const TaggedSubsequence& b, Tolerance tol) {
  for (double x : a.values)
    for (double y : b.values)
      if (std::abs(x - y) <= tol.abs_tol) return false;
  return true;
}

bool included(std::span<const double> inner, std::span<const double> outer, Tolerance tol) {
  return std::all_of(inner.begin(), inner.end(), [&](double x) {
    return std::any_of(outer.begin(), outer.end(),
                       [&](double y) { return std::abs(x - y) <= tol.abs_tol; });
  });
}

Sequence ordered_merge(std::span<const TaggedSubsequence> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.indices.size() != p.values.size())
      throw std::invalid_argument("tagged subsequence has mismatched indices and values");
    total += p.indices.size();
  }
  std::vector<double> out(total);
  std::vector<bool> seen(total, false);
  for (const auto& p : parts) {
    for (std::size_t k = 0; k < p.indices.size(); ++k) {
      const std::size_t idx = p.indices[k];
      if (idx < 1 || idx > total || seen[idx - 1])
        throw std::invalid_argument("tags do not cover 1..N exactly once");
      seen[idx - 1] = true;
      out[idx - 1] = p.values[k];
    }
  }
  return Sequence(std::move(out));
}

EpsilonForPeriod epsilon_for_period(const Sequence& u, std::size_t period) {
  require_period(u, period);
  EpsilonForPeriod best{-1.0, 1};
  for (std::size_t i = 1; i <= period; ++i) {
    const auto r = class_range(u, period, i);
    if (r.hi - r.lo > best.epsilon) best = {r.hi - r.lo, i};
  }
  return best;
}

bool is_periodic(const Sequence& u, std::size_t period, Tolerance tol) {
  if (period < 1 || period >= u.size()) return false;
  return epsilon_for_period(u, period).epsilon <= tol.abs_tol;
}

PeriodicityReport decompose(const Sequence& u, std::size_t period) {
  const auto eps = epsilon_for_period(u, period);
  std::vector<double> mid(period);
  for (std::size_t i = 1; i <= period; ++i) {
    const auto r = class_range(u, period, i);
    mid[i - 1] = (r.hi + r.lo) / 2.0;
  }
  std::vector<double> v(u.size());
  std::vector<double> r(u.size());
  for (std::size_t n = 1; n <= u.size(); ++n) {
    v[n - 1] = mid[(n - 1) % period];
    r[n - 1] = u(n) - v[n - 1];
  }
  Sequence residual(std::move(r));
  const double worst = max_abs(residual);
  return {period, eps.epsilon, Sequence(std::move(v)), std::move(residual), worst};
}

ConverseCheck verify_converse_stability(const Sequence& v, const Sequence& r, std::size_t period,
                                        double epsilon, Tolerance tol) {
  if (v.size() != r.size()) return {ConverseStatus::length_mismatch, 0.0};
  if (!is_periodic(v, period, tol)) return {ConverseStatus::v_not_periodic, 0.0};
  if (!tol.leq(max_abs(r), epsilon / 2.0)) return {ConverseStatus::residual_too_large, 0.0};
  std::vector<double> sum(v.size());
  for (std::size_t n = 1; n <= v.size(); ++n) sum[n - 1] = v(n) + r(n);
  const double measured = epsilon_for_period(Sequence(std::move(sum)), period).epsilon;
  return {tol.leq(measured, epsilon) ? ConverseStatus::holds : ConverseStatus::exceeds, measured};
}

ConverseCheck verify_converse_stability(const Sequence& v, const Sequence& r, std::size_t period,
                                        Tolerance tol) {
  return verify_converse_stability(v, r, period, 2.0 * max_abs(r), tol);
}

Interpolant periodic_interpolant(const Sequence& u, std::size_t period, Tolerance tol) {
  if (!is_periodic(u, period, tol))
    throw std::invalid_argument("sequence is not periodic with period " + std::to_string(period));
  return Interpolant(u);
}

std::vector<double> partial_sums(const Sequence& u) {
  std::vector<double> s(u.size() + 1, 0.0);
  for (std::size_t n = 1; n <= u.size(); ++n) s[n] = s[n - 1] + u(n);
  return s;
}

PartialSumProfile partial_sum_profile(const Sequence& u, std::size_t period, Tolerance tol) {
  require_period(u, period);
  const auto S = partial_sums(u);
  PartialSumProfile out;
  out.period = period;
  out.profiles.resize(period);
  out.constant.resize(period);
  for (std::size_t i = 1; i <= period; ++i) {
    auto& prof = out.profiles[i - 1];
    for (std::size_t base = 0; i + base <= u.size(); base += period) prof.push_back(S[i + base] - S[base]);
    const auto [lo, hi] = std::minmax_element(prof.begin(), prof.end());
    out.constant[i - 1] = *hi - *lo <= tol.abs_tol;
    out.all_constant = out.all_constant && out.constant[i - 1];
  }
  return out;
}

ConstantPartition constant_partition(const Sequence& u, std::size_t period, Tolerance tol) {
  const auto rc = split_residue_classes(u, period);
  ConstantPartition out;
  std::vector<double> class_value(period);
  for (std::size_t i = 1; i <= period; ++i) {
    const auto& cls = rc.classes[i - 1];
    const auto [lo, hi] = std::minmax_element(cls.begin(), cls.end());
    if (*hi - *lo > tol.abs_tol) {
      out.failing_class = i;
      return out;
    }
    double sum = 0.0;
    for (double x : cls) sum += x;
    class_value[i - 1] = sum / static_cast<double>(cls.size());
  }

  // A class joins the first piece whose founding class has an equal value.
  std::vector<double> founder;
  for (std::size_t i = 1; i <= period; ++i) {
    const double c = class_value[i - 1];
    auto it = std::find_if(founder.begin(), founder.end(),
                           [&](double f) { return std::abs(f - c) <= tol.abs_tol; });
    if (it == founder.end()) {
      founder.push_back(c);
      out.pieces.push_back({0.0, {i}, {}});
    } else {
      out.pieces[static_cast<std::size_t>(it - founder.begin())].classes.push_back(i);
    }
  }

  for (auto& piece : out.pieces) {
    double sum = 0.0;
    for (std::size_t i : piece.classes) sum += class_value[i - 1];
    piece.value = sum / static_cast<double>(piece.classes.size());
    for (std::size_t n = 1; n <= u.size(); ++n) {
      const std::size_t cls = (n - 1) % period + 1;
      if (std::find(piece.classes.begin(), piece.classes.end(), cls) != piece.classes.end()) {
        piece.elements.indices.push_back(n);
        piece.elements.values.push_back(u(n));
      }
    }
  }
  return out;
}

PeriodScan scan_periods(const Sequence& u, double max_epsilon) {
  if (u.size() < 2) throw std::domain_error("period scan needs at least two elements");
  const std::size_t last = std::max<std::size_t>(1, u.size() / 2);
  PeriodScan scan;
  for (std::size_t L = 1; L <= last; ++L) {
    const double eps = epsilon_for_period(u, L).epsilon;
    scan.entries.push_back({L, eps});
    if (!scan.best_period && eps <= max_epsilon) scan.best_period = L;
  }
  return scan;
}

}  // namespace subadd
