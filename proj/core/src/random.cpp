#include "covariant/random.hpp"

namespace covariant {

namespace {
__extension__ using u128 = unsigned __int128;
}

std::uint64_t SplitMix64::below(std::uint64_t n) noexcept {
  // Lemire's nearly-divisionless reduction with rejection.
  u128 m = static_cast<u128>(next()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<u128>(next()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

SplitMix64 SplitMix64::split(std::uint64_t salt) noexcept {
  SplitMix64 mixer(state_ ^ (salt * 0xd1342543de82ef95ULL));
  return SplitMix64(mixer.next());
}

double ValueSampler::real() {
  if (snap_) return static_cast<double>(static_cast<std::int64_t>(rng_.below(33)) - 16) / 16.0;
  return rng_.symmetric();
}

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t case_seed(std::uint64_t suite_seed, std::string_view case_key) noexcept {
  SplitMix64 rng(suite_seed ^ fnv1a(case_key));
  return rng.next();
}

}  // namespace covariant
