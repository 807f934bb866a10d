#include "subadd/envelope.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace subadd {

std::size_t PartitionWitness::total() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

EnvelopeResult subadditive_envelope(const Sequence& u) {
  const std::size_t N = u.size();
  std::vector<double> v(N);
  // split[n - 1] = k such that v_n = v_k + v_{n-k}, or 0 when v_n = u_n.
  std::vector<std::size_t> split(N, 0);

  for (std::size_t n = 1; n <= N; ++n) {
    double best = u(n);
    for (std::size_t k = 1; k <= n / 2; ++k) {
      const double candidate = v[k - 1] + v[n - k - 1];
      if (candidate < best) {
        best = candidate;
        split[n - 1] = k;
      }
    }
    v[n - 1] = best;
  }

  std::vector<PartitionWitness> witnesses(N);
  std::vector<std::size_t> pending;
  for (std::size_t n = 1; n <= N; ++n) {
    auto& parts = witnesses[n - 1].parts;
    pending.assign(1, n);
    while (!pending.empty()) {
      const std::size_t m = pending.back();
      pending.pop_back();
      const std::size_t k = split[m - 1];
      if (k == 0) {
        parts.push_back(m);
      } else {
        pending.push_back(k);
        pending.push_back(m - k);
      }
    }
    std::sort(parts.begin(), parts.end());
  }
  return {Sequence(std::move(v)), std::move(witnesses)};
}

double witness_sum(const Sequence& u, const PartitionWitness& w) {
  double sum = 0.0;
  for (std::size_t p : w.parts) sum += u.at(p);
  return sum;
}

MaximalityCheck verify_maximality(const Sequence& u, const Sequence& v, const Sequence& w,
                                  Tolerance tol) {
  if (u.size() != v.size() || u.size() != w.size())
    return {MaximalityStatus::length_mismatch, std::nullopt};
  if (auto check = is_subadditive(w, tol); !check)
    return {MaximalityStatus::w_not_subadditive, check.violation->m + check.violation->n};
  for (std::size_t n = 1; n <= u.size(); ++n)
    if (!tol.leq(w(n), u(n))) return {MaximalityStatus::w_above_u, n};
  for (std::size_t n = 1; n <= u.size(); ++n)
    if (!tol.leq(w(n), v(n))) return {MaximalityStatus::not_dominated, n};
  return {};
}

SandwichResult sandwich(const Sequence& u, const Sequence& w, Tolerance tol) {
  if (u.size() != w.size()) throw std::invalid_argument("sandwich: u and w differ in length");
  auto env = subadditive_envelope(u);
  for (std::size_t n = 1; n <= u.size(); ++n)
    if (!tol.leq(w(n), env.v(n))) return {std::nullopt, n};
  return {std::move(env.v), std::nullopt};
}

}  // namespace subadd
