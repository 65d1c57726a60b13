#ifndef RICBOUNDS_RNG_HPP
#define RICBOUNDS_RNG_HPP

// Counter-based generator: the i-th 64-bit word of stream (seed) is
//   splitmix64_mix(seed + (i + 1) * 0x9E3779B97F4A7C15)
// with the SplitMix64 finalizer. Any word can be produced independently,
// which keeps matrix entries and support draws reproducible regardless of
// evaluation order or worker count.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ricbounds {

__extension__ typedef unsigned __int128 uint128_t;

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class CounterRng {
public:
  static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

  explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  constexpr std::uint64_t seed() const noexcept { return seed_; }

  /// Word at counter position i.
  constexpr std::uint64_t word(std::uint64_t i) const noexcept { return splitmix64_mix(seed_ + (i + 1) * golden); }

  /// Uniform on the open interval (0,1): ((w >> 11) + 0.5) / 2^53.
  double uniform(std::uint64_t i) const noexcept {
    return (static_cast<double>(word(i) >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal number m via Box-Muller on the uniform pair
  /// (2*floor(m/2), 2*floor(m/2)+1): even m takes the cosine branch,
  /// odd m the sine branch.
  double normal(std::uint64_t m) const noexcept {
    const std::uint64_t pair = m / 2;
    const double u1 = uniform(2 * pair);
    const double u2 = uniform(2 * pair + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return (m % 2 == 0) ? r * std::cos(angle) : r * std::sin(angle);
  }

  /// Index in [0, bound) from word i by the 128-bit multiply-high map
  /// floor(w * bound / 2^64).
  std::uint64_t below(std::uint64_t i, std::uint64_t bound) const noexcept {
    const uint128_t prod = static_cast<uint128_t>(word(i)) * bound;
    return static_cast<std::uint64_t>(prod >> 64);
  }

private:
  std::uint64_t seed_;
};

/// A sequential cursor over a CounterRng stream.
class RngCursor {
public:
  explicit RngCursor(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_.below(pos_++, bound); }
  std::uint64_t position() const noexcept { return pos_; }

private:
  CounterRng rng_;
  std::uint64_t pos_ = 0;
};

}  // namespace ricbounds

#endif  // RICBOUNDS_RNG_HPP
