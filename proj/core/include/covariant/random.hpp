#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace covariant {

/// SplitMix64 (Steele, Lea, Flood). Used directly for seeding and as the
/// suite PRNG, so reports replay bit-for-bit on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-1, 1].
  double symmetric() noexcept { return 2.0 * unit() - 1.0; }

  /// Child generator for an independent stream keyed by `salt`.
  SplitMix64 split(std::uint64_t salt) noexcept;

 private:
  std::uint64_t state_;
};

/// Draws test-function values: real and imaginary parts uniform on [-1, 1],
/// optionally snapped to the grid k/16.
class ValueSampler {
 public:
  ValueSampler(SplitMix64 rng, bool snap) noexcept : rng_(rng), snap_(snap) {}

  double real();
  std::complex<double> complex() {
    const double re = real();
    return {re, real()};
  }
  SplitMix64& rng() noexcept { return rng_; }

 private:
  SplitMix64 rng_;
  bool snap_;
};

/// 64-bit FNV-1a of a string, used to derive per-case seeds.
std::uint64_t fnv1a(std::string_view text) noexcept;

/// Seed for one case: SplitMix64 output on seed ^ fnv1a(case key).
std::uint64_t case_seed(std::uint64_t suite_seed, std::string_view case_key) noexcept;

inline constexpr std::string_view kPrngDescription =
    "splitmix64; case stream seeded by splitmix64(seed ^ fnv1a64(case_key)); values k/16 or "
    "53-bit uniform on [-1,1]";

}  // namespace covariant
