#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "subadd/generators.hpp"
#include "subadd/periodicity.hpp"

using namespace subadd;

namespace {

const Sequence kNoisy({0, 10, 0.4, 10.2, -0.2, 9.8});

double max_abs(const Sequence& s) {
  double m = 0.0;
  for (double x : s.values()) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("epsilon_for_period worked cases") {
  const auto e = epsilon_for_period(kNoisy, 2);
  CHECK(e.epsilon == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(e.worst_class == 1);
  CHECK(e.epsilon == oracle::epsilon_by_shifts(kNoisy.values(), 2));

  CHECK(epsilon_for_period(Sequence({1, 2, 3, 1, 2, 3, 1}), 3).epsilon == 0.0);
  CHECK(epsilon_for_period(Sequence({4, 4, 4, 4}), 1).epsilon == 0.0);
  CHECK(epsilon_for_period(Sequence({4, 4, 4, 4}), 3).epsilon == 0.0);

  CHECK_THROWS_AS(epsilon_for_period(kNoisy, 0), std::domain_error);
  CHECK_THROWS_AS(epsilon_for_period(kNoisy, 6), std::domain_error);
  CHECK_THROWS_AS(epsilon_for_period(Sequence({1}), 1), std::domain_error);
}

TEST_CASE("property: class spreads equal the largest shift difference") {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 40));
    const auto L = static_cast<std::size_t>(rng.uniform_int(1, n - 1));
    const auto u = generate({.family = Family::uniform_random, .length = n, .seed = rng.next()});
    CHECK(epsilon_for_period(u, L).epsilon == oracle::epsilon_by_shifts(u.values(), L));
  }
}

TEST_CASE("decompose worked cases") {
  const auto r = decompose(kNoisy, 2);
  CHECK(r.periodic(1) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(r.periodic(2) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(is_periodic(r.periodic, 2, Tolerance{0.0}));
  CHECK(r.max_residual == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(r.max_residual <= r.epsilon / 2.0);

  const Sequence periodic({1, 2, 3, 1, 2, 3, 1});
  const auto p = decompose(periodic, 3);
  CHECK(p.periodic == periodic);
  CHECK(p.max_residual == 0.0);

  const auto c = decompose(Sequence({5, 5, 5}), 1);
  CHECK(c.periodic == Sequence({5, 5, 5}));
  CHECK(c.max_residual == 0.0);
}

TEST_CASE("property: midrange decomposition is tight") {
  SplitMix64 rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 120));
    const auto L = static_cast<std::size_t>(rng.uniform_int(1, std::min<std::size_t>(n - 1, 12)));
    const auto u = generate({.family = Family::periodic_plus_noise, .length = n, .seed = rng.next(),
                             .period = L, .noise = 0.5, .low = -5, .high = 5});
    const auto r = decompose(u, L);
    // The exact midrange need not be representable; the residual may exceed
    // half the spread by half a unit in the last place of the values.
    const double q = std::nextafter(std::max(std::abs(u.min()), std::abs(u.max())), HUGE_VAL) -
                     std::max(std::abs(u.min()), std::abs(u.max()));
    CHECK(r.max_residual <= r.epsilon / 2.0 + q / 2.0);
    CHECK(r.epsilon / 2.0 - r.max_residual <= 1e-12);
    CHECK(epsilon_for_period(r.periodic, L).epsilon == 0.0);
    for (std::size_t i = 1; i <= n; ++i) CHECK(r.periodic(i) + r.residual(i) == doctest::Approx(u(i)));
  }
}

TEST_CASE("property: midrange decomposition is exact on a dyadic grid") {
  SplitMix64 rng(57);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 120));
    const auto L = static_cast<std::size_t>(rng.uniform_int(1, std::min<std::size_t>(n - 1, 12)));
    std::vector<double> vals(n);
    for (auto& x : vals) x = std::ldexp(static_cast<double>(rng.uniform_int(0, 1 << 25)) - (1 << 24), -20);
    const auto r = decompose(Sequence(vals), L);
    CHECK(r.max_residual <= r.epsilon / 2.0);
  }
}

TEST_CASE("verify_converse_stability") {
  const Sequence v({1, 2, 1, 2});
  const auto ok = verify_converse_stability(v, Sequence({0.1, -0.1, 0, 0}), 2, 0.2);
  CHECK(ok.holds());
  CHECK(ok.measured_epsilon == doctest::Approx(0.1));

  const auto zero = verify_converse_stability(v, Sequence({0, 0, 0, 0}), 2);
  CHECK(zero.holds());
  CHECK(zero.measured_epsilon == 0.0);

  const double d = 0.25;
  const auto alt = verify_converse_stability(Sequence({3, 3, 3, 3, 3}), Sequence({d, -d, d, -d, d}), 1);
  CHECK(alt.holds());
  CHECK(alt.measured_epsilon == 2 * d);

  CHECK(verify_converse_stability(Sequence({1, 2, 3, 4}), Sequence({0, 0, 0, 0}), 2).status ==
        ConverseStatus::v_not_periodic);
  CHECK(verify_converse_stability(v, Sequence({1, 0, 0, 0}), 2, 0.2).status ==
        ConverseStatus::residual_too_large);
  CHECK(verify_converse_stability(v, Sequence({0, 0}), 2).status == ConverseStatus::length_mismatch);
}

TEST_CASE("periodic interpolant repeats with the period") {
  const auto f = periodic_interpolant(Sequence({1, 2, 3, 1, 2, 3, 1}), 3);
  CHECK(f(1.5) == 1.5);
  CHECK(f(4.5) == 1.5);

  const auto g = periodic_interpolant(Sequence({1, 2, 1, 2, 1}), 2);
  CHECK(g(1.25) == 1.25);
  CHECK(g(3.25) == 1.25);

  const auto h = periodic_interpolant(Sequence({7, 7, 7}), 1);
  CHECK(h(2.7) == 7.0);

  CHECK_THROWS_AS(periodic_interpolant(Sequence({1, 2, 3, 4}), 2), std::invalid_argument);

  SplitMix64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto L = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const auto n = L + static_cast<std::size_t>(rng.uniform_int(1, 30));
    const auto u = generate({.family = Family::exact_periodic, .length = n, .seed = rng.next(), .period = L});
    const auto p = periodic_interpolant(u, L);
    for (int s = 0; s < 20; ++s) {
      const double x = rng.uniform(1.0, static_cast<double>(n - L));
      CHECK(p(x + static_cast<double>(L)) == doctest::Approx(p(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("partial sums and profiles") {
  const Sequence u({1, 2, 3, 1, 2, 3});
  const auto S = partial_sums(u);
  CHECK(S == std::vector<double>{0, 1, 3, 6, 7, 9, 12});

  const auto p = partial_sum_profile(u, 3);
  REQUIRE(p.profiles.size() == 3);
  CHECK(p.profiles[0] == std::vector<double>{1, 1});
  CHECK(p.profiles[1] == std::vector<double>{3, 3});
  CHECK(p.profiles[2] == std::vector<double>{6, 6});
  CHECK(p.all_constant);

  const auto q = partial_sum_profile(Sequence({1, 2, 3, 4}), 2);
  CHECK(q.profiles[0] == std::vector<double>{1, 3});
  CHECK_FALSE(q.constant[0]);
  CHECK_FALSE(q.all_constant);

  const auto c = partial_sum_profile(Sequence({2, 2, 2, 2, 2}), 2);
  CHECK(c.profiles[0] == std::vector<double>{2, 2, 2});
  CHECK(c.profiles[1] == std::vector<double>{4, 4});
  CHECK(c.all_constant);
}

TEST_CASE("property: a single perturbation breaks exactly the profiles that contain it") {
  SplitMix64 rng(54);
  for (int trial = 0; trial < 300; ++trial) {
    const auto L = static_cast<std::size_t>(rng.uniform_int(1, 12));
    const auto n = L + static_cast<std::size_t>(rng.uniform_int(1, 200));
    const auto u = generate({.family = Family::exact_periodic, .length = n, .seed = rng.next(), .period = L});
    REQUIRE(partial_sum_profile(u, L).all_constant);

    const auto j = static_cast<std::size_t>(rng.uniform_int(1, n));
    std::vector<double> vals(u.values().begin(), u.values().end());
    vals[j - 1] += 1.0;
    const auto p = partial_sum_profile(Sequence(vals), L);
    const std::size_t residue = (j - 1) % L + 1;
    const std::size_t block = (j - 1) / L;
    for (std::size_t i = 1; i <= L; ++i) {
      const bool contains = i >= residue && i + block * L <= n;
      const bool breaks = contains && p.profiles[i - 1].size() >= 2;
      CHECK(p.constant[i - 1] == !breaks);
    }
  }
}

TEST_CASE("constant_partition") {
  const auto alt = constant_partition(Sequence({1, 2, 1, 2, 1, 2}), 2);
  REQUIRE(alt);
  REQUIRE(alt.pieces.size() == 2);
  CHECK(alt.pieces[0].value == 1.0);
  CHECK(alt.pieces[0].elements.indices == std::vector<std::size_t>{1, 3, 5});
  CHECK(alt.pieces[1].value == 2.0);

  const auto merged = constant_partition(Sequence({5, 5, 5, 5}), 2);
  REQUIRE(merged);
  REQUIRE(merged.pieces.size() == 1);
  CHECK(merged.pieces[0].classes == std::vector<std::size_t>{1, 2});
  CHECK(merged.pieces[0].elements.indices == std::vector<std::size_t>{1, 2, 3, 4});

  const auto fail = constant_partition(Sequence({1, 2, 3, 4}), 2);
  CHECK_FALSE(fail);
  CHECK(fail.failing_class == 1);
}

TEST_CASE("property: constant partition pieces are distinct, disjoint and rebuild u") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const auto L = static_cast<std::size_t>(rng.uniform_int(1, 12));
    const auto n = L + static_cast<std::size_t>(rng.uniform_int(1, 100));
    // Integer-valued pattern so several classes usually share a value.
    std::vector<double> pattern(L);
    for (auto& x : pattern) x = static_cast<double>(rng.uniform_int(0, 3));
    const auto u = generate({.family = Family::exact_periodic, .length = n, .pattern = pattern});
    const auto cp = constant_partition(u, L);
    REQUIRE(cp);
    CHECK(cp.pieces.size() <= L);
    std::vector<TaggedSubsequence> tagged;
    for (std::size_t a = 0; a < cp.pieces.size(); ++a) {
      tagged.push_back(cp.pieces[a].elements);
      CHECK(included(cp.pieces[a].elements.values, u.values()));
      for (std::size_t b = a + 1; b < cp.pieces.size(); ++b)
        CHECK(distinct(cp.pieces[a].elements, cp.pieces[b].elements));
    }
    CHECK(ordered_merge(tagged) == u);
  }
}

TEST_CASE("split and merge residue classes") {
  const auto rc = split_residue_classes(Sequence({1, 2, 3, 4, 5}), 2);
  CHECK(rc.classes[0] == std::vector<double>{1, 3, 5});
  CHECK(rc.classes[1] == std::vector<double>{2, 4});

  CHECK(merge_classes({2, {{1, 1}, {2, 2}}}) == Sequence({1, 2, 1, 2}));
  CHECK(merge_classes({2, {{1, 1}, {2}}}) == Sequence({1, 2, 1}));
  CHECK_THROWS_AS(merge_classes({2, {{1}, {2, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(merge_classes({3, {{1, 1, 1}, {2}, {2}}}), std::invalid_argument);
  CHECK_THROWS_AS(merge_classes({2, {{1}}}), std::invalid_argument);

  SplitMix64 rng(56);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 60));
    const auto L = static_cast<std::size_t>(rng.uniform_int(1, n - 1));
    const auto u = generate({.family = Family::uniform_random, .length = n, .seed = rng.next()});
    CHECK(merge_classes(split_residue_classes(u, L)) == u);
  }
}

TEST_CASE("ordered_merge validates tags") {
  const std::vector<TaggedSubsequence> gap{{{1, 3}, {1.0, 2.0}}};
  CHECK_THROWS_AS(ordered_merge(gap), std::invalid_argument);
  const std::vector<TaggedSubsequence> dup{{{1}, {1.0}}, {{1}, {2.0}}};
  CHECK_THROWS_AS(ordered_merge(dup), std::invalid_argument);
}

TEST_CASE("unit period means constant") {
  CHECK(is_periodic(Sequence({3, 3, 3}), 1));
  CHECK_FALSE(is_periodic(Sequence({3, 3, 3.1}), 1));
  CHECK_FALSE(is_periodic(Sequence({3, 3, 3}), 3));
}

TEST_CASE("period scan") {
  const auto scan = scan_periods(Sequence({1, 2, 3, 1, 2, 3, 1, 2}), 0.0);
  REQUIRE(scan.entries.size() == 4);
  CHECK(scan.entries[0].period == 1);
  CHECK(scan.entries[0].epsilon == 2.0);
  CHECK(scan.best_period == 3);

  const auto none = scan_periods(Sequence({1, 2, 3, 4}), 0.5);
  CHECK_FALSE(none.best_period);
  CHECK(scan_periods(Sequence({1, 2}), 1.0).entries.size() == 1);
  CHECK_THROWS_AS(scan_periods(Sequence({1}), 0.0), std::domain_error);
}
