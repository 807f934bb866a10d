#include "subadd/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subadd {

Sequence::Sequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("sequence must have at least one element");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw std::invalid_argument("non-finite value at index " + std::to_string(i + 1));
  }
}

double Sequence::at(std::size_t i) const {
  if (i < 1 || i > values_.size())
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." +
                            std::to_string(values_.size()));
  return values_[i - 1];
}

double Sequence::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }

double Sequence::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }

Tolerance Tolerance::absolute(double abs_tol) {
  if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol))
    throw std::invalid_argument("tolerance must be finite and non-negative");
  return Tolerance{abs_tol};
}

SubadditivityCheck is_subadditive(const Sequence& u, Tolerance tol) {
  const std::size_t N = u.size();
  for (std::size_t s = 2; s <= N; ++s) {
    // (m, s - m) and (s - m, m) test the same inequality.
    for (std::size_t m = 1; m <= s / 2; ++m) {
      if (!tol.leq(u(s), u(m) + u(s - m))) return {false, IndexPair{m, s - m}};
    }
  }
  return {};
}

bool is_nonneg_decreasing(const Sequence& u) {
  const auto v = u.values();
  if (std::any_of(v.begin(), v.end(), [](double x) { return x < 0.0; })) return false;
  return std::adjacent_find(v.begin(), v.end(), [](double a, double b) { return b > a; }) == v.end();
}

bool difference_bound_holds(const Sequence& u, Tolerance tol) {
  const std::size_t N = u.size();
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t m = 1; m < n; ++m)
      if (!tol.leq(u(n) - u(m), u(n - m))) return false;
  return true;
}

Sequence prepend_zero(const Sequence& u) {
  std::vector<double> out;
  out.reserve(u.size() + 1);
  out.push_back(0.0);
  out.insert(out.end(), u.values().begin(), u.values().end());
  return Sequence(std::move(out));
}

}  // namespace subadd
