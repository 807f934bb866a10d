#include "subadd/bounds.hpp"

#include <cmath>

namespace subadd {

MeanHeight mean_and_height(const Sequence& u) {
  double sum = 0.0;
  for (double x : u.values()) sum += x;
  MeanHeight out{sum / static_cast<double>(u.size()), std::nullopt};
  if (u.size() >= 2) out.height = u.max() - u.min();
  return out;
}

bool ostrowski_check(const Sequence& u, Tolerance tol) {
  const auto mh = mean_and_height(u);
  if (!mh.height) return false;
  for (double x : u.values())
    if (!tol.leq(std::abs(mh.mean - x), *mh.height)) return false;
  return true;
}

BoundsReport hermite_hadamard_bounds(const Sequence& u, Tolerance tol) {
  const auto mh = mean_and_height(u);
  const std::size_t N = u.size();
  BoundsReport r;
  r.mean = mh.mean;
  r.height = mh.height;
  r.parity = N % 2 == 0 ? Parity::even : Parity::odd;
  r.subadditive = is_subadditive(u, tol).holds;
  if (N < 2) return r;

  const double n = static_cast<double>(N);
  // Multiplications before the single division keep additive inputs with
  // small integer slopes exact, so saturation is observable bitwise.
  if (r.parity == Parity::even)
    r.hh_lower = ((n + 2.0) * u(N) - 2.0 * u(N / 2)) / (2.0 * n);
  else
    r.hh_lower = (n + 1.0) * u(N) / (2.0 * n);
  r.hh_upper = (n + 1.0) * u(1) / 2.0;
  r.bracket_holds = tol.leq(*r.hh_lower, r.mean) && tol.leq(r.mean, *r.hh_upper);
  return r;
}

}  // namespace subadd
