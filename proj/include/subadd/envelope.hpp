#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subadd/core.hpp"

namespace subadd {

/// A partition n_1 + ... + n_k = n, parts sorted ascending.
struct PartitionWitness {
  std::vector<std::size_t> parts;

  std::size_t total() const noexcept;

  friend bool operator==(const PartitionWitness&, const PartitionWitness&) = default;
};

struct EnvelopeResult {
  Sequence v;
  /// witnesses[n - 1] realises v_n.
  std::vector<PartitionWitness> witnesses;
};

/// Largest subadditive sequence pointwise below u:
///
///   v_n = min { u_{n_1} + ... + u_{n_k} : n_1 + ... + n_k = n }
///
/// evaluated through the split recurrence
///   v_1 = u_1,  v_n = min(u_n, min_{1<=k<=n/2} v_k + v_{n-k}).
/// The singleton wins ties, then the smallest k. Every computed v_n is <= the
/// rounded sum v_k + v_{n-k}, so v is subadditive in floating point as well
/// and applying the envelope again returns v bitwise. O(N^2) time.
EnvelopeResult subadditive_envelope(const Sequence& u);

/// Sum of u over the parts of `w`, ascending part order.
double witness_sum(const Sequence& u, const PartitionWitness& w);

enum class MaximalityStatus {
  dominated,            ///< w_n <= v_n for every n
  not_dominated,        ///< some w_n > v_n; the envelope is not maximal
  w_not_subadditive,    ///< precondition: w fails is_subadditive
  w_above_u,            ///< precondition: some w_n > u_n
  length_mismatch,      ///< precondition: u, v, w lengths differ
};

struct MaximalityCheck {
  MaximalityStatus status = MaximalityStatus::dominated;
  /// 1-based index of the first offending entry for not_dominated and
  /// w_above_u; the violating pair's m + n for w_not_subadditive.
  std::optional<std::size_t> index;

  bool holds() const noexcept { return status == MaximalityStatus::dominated; }
};

/// Checks that v dominates a subadditive minorant w of u.
MaximalityCheck verify_maximality(const Sequence& u, const Sequence& v, const Sequence& w,
                                  Tolerance tol = {});

struct SandwichResult {
  /// The envelope of u when w_n <= v_n holds everywhere.
  std::optional<Sequence> v;
  /// Smallest n with w_n > v_n + tol.
  std::optional<std::size_t> failing_index;

  explicit operator bool() const noexcept { return v.has_value(); }
};

/// If w_n is below every partition sum of u, returns a subadditive v with
/// w <= v <= u. Otherwise names the smallest n where the hypothesis fails.
SandwichResult sandwich(const Sequence& u, const Sequence& w, Tolerance tol = {});

}  // namespace subadd
