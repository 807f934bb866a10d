#include "subadd/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "subadd/envelope.hpp"

namespace subadd {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

std::uint64_t SplitMix64::uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return next();  // full 64-bit range
  return lo + next() % span;
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::subadditive_envelope, "subadditive-via-envelope"},
    {Family::concave_sampled, "concave-sampled"},
    {Family::affine, "affine"},
    {Family::nonneg_decreasing, "nonneg-decreasing"},
    {Family::exact_periodic, "exact-periodic"},
    {Family::periodic_plus_noise, "periodic-plus-noise"},
    {Family::uniform_random, "uniform-random"},
}};

std::vector<double> uniform_values(SplitMix64& rng, std::size_t n, double lo, double hi) {
  std::vector<double> out(n);
  for (auto& x : out) x = rng.uniform(lo, hi);
  return out;
}

std::vector<double> tiled(const GeneratorSpec& spec, SplitMix64& rng) {
  std::vector<double> pattern = spec.pattern;
  if (pattern.empty()) pattern = uniform_values(rng, spec.period, spec.low, spec.high);
  std::vector<double> out(spec.length);
  for (std::size_t n = 0; n < spec.length; ++n) out[n] = pattern[n % pattern.size()];
  return out;
}

void validate(const GeneratorSpec& spec) {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (spec.length == 0) fail("generator length must be at least 1");
  if (!(spec.low <= spec.high) || !std::isfinite(spec.low) || !std::isfinite(spec.high))
    fail("generator range requires finite low <= high");
  if (!std::isfinite(spec.a) || !std::isfinite(spec.b)) fail("generator a and b must be finite");
  switch (spec.family) {
    case Family::concave_sampled:
      if (!(spec.exponent > 0.0 && spec.exponent <= 1.0)) fail("concave exponent must lie in (0, 1]");
      if (spec.a < 0.0 || spec.b < 0.0) fail("concave family requires a >= 0 and b >= 0");
      break;
    case Family::nonneg_decreasing:
      if (spec.high < 0.0) fail("nonneg-decreasing requires high >= 0");
      break;
    case Family::exact_periodic:
    case Family::periodic_plus_noise: {
      const std::size_t L = spec.pattern.empty() ? spec.period : spec.pattern.size();
      if (L < 1 || L >= spec.length) fail("period must satisfy 1 <= L < length");
      if (!spec.pattern.empty() && spec.period != 1 && spec.period != L)
        fail("pattern length and period disagree");
      for (double x : spec.pattern)
        if (!std::isfinite(x)) fail("pattern values must be finite");
      if (!(spec.noise >= 0.0) || !std::isfinite(spec.noise)) fail("noise must be finite and >= 0");
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

Family family_from_name(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  throw std::invalid_argument("unknown generator family '" + std::string(name) + "'");
}

Sequence generate(const GeneratorSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  const std::size_t N = spec.length;
  std::vector<double> out;

  switch (spec.family) {
    case Family::subadditive_envelope:
      return subadditive_envelope(Sequence(uniform_values(rng, N, spec.low, spec.high))).v;
    case Family::concave_sampled:
      out.resize(N);
      for (std::size_t n = 1; n <= N; ++n)
        out[n - 1] = spec.a * std::pow(static_cast<double>(n), spec.exponent) + spec.b;
      break;
    case Family::affine:
      out.resize(N);
      for (std::size_t n = 1; n <= N; ++n) out[n - 1] = spec.a * static_cast<double>(n) + spec.b;
      break;
    case Family::nonneg_decreasing:
      out = uniform_values(rng, N, std::max(spec.low, 0.0), spec.high);
      std::sort(out.begin(), out.end(), std::greater<>());
      break;
    case Family::exact_periodic:
      out = tiled(spec, rng);
      break;
    case Family::periodic_plus_noise:
      out = tiled(spec, rng);
      for (auto& x : out) x += rng.uniform(-spec.noise, spec.noise);
      break;
    case Family::uniform_random:
      out = uniform_values(rng, N, spec.low, spec.high);
      break;
  }
  return Sequence(std::move(out));
}

}  // namespace subadd
