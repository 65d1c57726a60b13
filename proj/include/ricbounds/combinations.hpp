#ifndef RICBOUNDS_COMBINATIONS_HPP
#define RICBOUNDS_COMBINATIONS_HPP

// k-subsets of {0, ..., N-1} in lexicographic order.

#include <cstdint>
#include <limits>
#include <vector>

#include "ricbounds/errors.hpp"
#include "ricbounds/rng.hpp"

namespace ricbounds {

/// C(n, k), saturating at UINT64_MAX on overflow.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  uint128_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r is C(n-k+i, i) after each step
    if (r > cap) return cap;
  }
  return static_cast<std::uint64_t>(r);
}

/// First combination {0, 1, ..., k-1}.
inline std::vector<std::uint32_t> first_combination(std::uint32_t k) {
  std::vector<std::uint32_t> c(k);
  for (std::uint32_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

/// Advances c to the lexicographic successor among k-subsets of [0, n).
/// Returns false (leaving c unchanged) when c is the last one.
inline bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
  const auto k = static_cast<std::uint32_t>(c.size());
  std::uint32_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// The combination at lexicographic position `rank` (0-based).
inline std::vector<std::uint32_t> unrank_combination(std::uint64_t rank, std::uint32_t n, std::uint32_t k) {
  if (rank >= binomial(n, k)) throw domain_error("unrank_combination: rank out of range");
  std::vector<std::uint32_t> c;
  c.reserve(k);
  std::uint32_t x = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    // Skip blocks of combinations whose i-th element is x.
    while (true) {
      const std::uint64_t block = binomial(n - x - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    c.push_back(x++);
  }
  return c;
}

}  // namespace ricbounds

#endif  // RICBOUNDS_COMBINATIONS_HPP
