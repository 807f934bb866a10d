#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "subadd/envelope.hpp"
#include "subadd/generators.hpp"

using namespace subadd;

namespace {

std::vector<std::size_t> parts(std::initializer_list<std::size_t> p) { return p; }

Sequence noise(std::uint64_t seed, std::size_t n, double lo, double hi) {
  return generate({.family = Family::uniform_random, .length = n, .seed = seed, .low = lo, .high = hi});
}

}  // namespace

TEST_CASE("envelope of <1,5,2> with witnesses") {
  const auto env = subadditive_envelope(Sequence({1, 5, 2}));
  CHECK(env.v == Sequence({1, 2, 2}));
  REQUIRE(env.witnesses.size() == 3);
  CHECK(env.witnesses[0].parts == parts({1}));
  CHECK(env.witnesses[1].parts == parts({1, 1}));
  CHECK(env.witnesses[2].parts == parts({3}));
}

TEST_CASE("envelope of <3,1,7>") {
  const auto env = subadditive_envelope(Sequence({3, 1, 7}));
  CHECK(env.v == Sequence({3, 1, 4}));
  CHECK(env.witnesses[2].parts == parts({1, 2}));
}

TEST_CASE("envelope leaves subadditive input unchanged") {
  const Sequence u({4, 1, 0, -1, -4, -2, -3});
  CHECK(subadditive_envelope(u).v == u);
  const Sequence single({-7.25});
  CHECK(subadditive_envelope(single).v == single);
}

TEST_CASE("ties prefer the singleton, then the smallest split") {
  // u_2 = 2 = u_1 + u_1: both {2} and {1,1} cost 2.
  CHECK(subadditive_envelope(Sequence({1, 2})).witnesses[1].parts == parts({2}));
  // v_4 = 2 via {1,3}; {2,2} costs 4.
  const auto env = subadditive_envelope(Sequence({1, 2, 1, 9}));
  CHECK(env.v(4) == 2);
  CHECK(env.witnesses[3].parts == parts({1, 3}));
  // v_4 = 0 via {1,3} or {2,2}; k = 1 is tried first.
  const auto tie = subadditive_envelope(Sequence({0, 0, 0, 5}));
  CHECK(tie.witnesses[3].parts == parts({1, 3}));
}

TEST_CASE("verify_maximality") {
  const Sequence u({1, 5, 2});
  const auto v = subadditive_envelope(u).v;
  CHECK(verify_maximality(u, v, v).holds());

  const Sequence u2({2, 2});
  const auto v2 = subadditive_envelope(u2).v;
  CHECK(v2 == Sequence({2, 2}));
  CHECK(verify_maximality(u2, v2, Sequence({1, 2})).holds());

  const auto pre = verify_maximality(u, v, Sequence({1, 5, 2}));
  CHECK(pre.status == MaximalityStatus::w_not_subadditive);
  CHECK(verify_maximality(u, v, Sequence({2, 2, 2})).status == MaximalityStatus::w_above_u);
  CHECK(verify_maximality(u, v, Sequence({1, 2})).status == MaximalityStatus::length_mismatch);
  // A wrong "envelope" that sits below a genuine subadditive minorant.
  const auto bad = verify_maximality(u, Sequence({1, 1.5, 2}), v);
  CHECK(bad.status == MaximalityStatus::not_dominated);
  CHECK(bad.index == 2);
}

TEST_CASE("sandwich") {
  const Sequence u({1, 5, 2});
  const auto ok = sandwich(u, Sequence({0, 0, 0}));
  REQUIRE(ok);
  CHECK(*ok.v == Sequence({1, 2, 2}));

  const Sequence sub({4, 1, 0, -1, -4, -2, -3});
  const auto eq = sandwich(sub, sub);
  REQUIRE(eq);
  CHECK(*eq.v == sub);

  const auto fail = sandwich(u, Sequence({0, 3, 0}));
  CHECK_FALSE(fail);
  CHECK(fail.failing_index == 2);
  CHECK_THROWS_AS(sandwich(u, Sequence({0, 0})), std::invalid_argument);
}

TEST_CASE("property: exhaustive integer sequences match composition enumeration") {
  // All sequences of length <= 6 over {-1, 0, 1}.
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<int> digits(len, 0);
    while (true) {
      std::vector<double> vals(len);
      for (std::size_t i = 0; i < len; ++i) vals[i] = digits[i] - 1;
      const Sequence u(vals);
      const auto env = subadditive_envelope(u);
      const auto want = oracle::envelope_by_enumeration(vals);
      for (std::size_t n = 1; n <= len; ++n) {
        CHECK(env.v(n) == want[n - 1]);
        CHECK(env.witnesses[n - 1].total() == n);
        CHECK(witness_sum(u, env.witnesses[n - 1]) == env.v(n));
      }
      std::size_t k = 0;
      while (k < len && digits[k] == 2) digits[k++] = 0;
      if (k == len) break;
      ++digits[k];
    }
  }
}

TEST_CASE("property: random real sequences match composition enumeration") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 10));
    const auto u = noise(rng.next(), n, -5.0, 5.0);
    const auto env = subadditive_envelope(u);
    const auto want = oracle::envelope_by_enumeration(u.values());
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(std::abs(env.v(i) - want[i - 1]) <= 1e-12);
      CHECK(std::abs(witness_sum(u, env.witnesses[i - 1]) - env.v(i)) <= 1e-12);
    }
  }
}

TEST_CASE("property: envelope is monotone in its input") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 80));
    const auto u = noise(rng.next(), n, -3.0, 3.0);
    std::vector<double> bumped(u.values().begin(), u.values().end());
    for (auto& x : bumped) x += rng.uniform(0.0, 1.0);
    const auto v = subadditive_envelope(u).v;
    const auto w = subadditive_envelope(Sequence(bumped)).v;
    for (std::size_t i = 1; i <= n; ++i) CHECK(v(i) <= w(i) + 1e-12);
  }
}

TEST_CASE("property: envelope is subadditive, below input, idempotent") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 200));
    const auto u = noise(rng.next(), n, -10.0, 10.0);
    const auto v = subadditive_envelope(u).v;
    CHECK(is_subadditive(v, Tolerance{0.0}).holds);
    for (std::size_t i = 1; i <= n; ++i) CHECK(v(i) <= u(i));
    CHECK(subadditive_envelope(v).v == v);
  }
}
