#ifndef RICBOUNDS_MATRIX_HPP
#define RICBOUNDS_MATRIX_HPP

// Dense column-major Gaussian matrices and the RICM binary layout:
//   bytes 0..3  "RICM"
//   u32 n, u32 N         little-endian
//   f64 entries[n*N]     little-endian, column-major

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ricbounds/errors.hpp"
#include "ricbounds/rng.hpp"

namespace ricbounds {

/// Default cap on n*N for sample_gaussian (128 MiB of doubles).
inline constexpr std::uint64_t default_entry_cap = 16'777'216;

class MatrixSample {
public:
  MatrixSample(std::uint32_t n, std::uint32_t N, std::uint64_t seed, std::vector<double> entries)
      : n_(n), N_(N), seed_(seed), entries_(std::move(entries)) {
    if (n == 0 || N == 0) throw domain_error("MatrixSample: empty dimensions");
    if (entries_.size() != static_cast<std::size_t>(n) * N) throw domain_error("MatrixSample: entry count != n*N");
  }

  std::uint32_t rows() const noexcept { return n_; }
  std::uint32_t cols() const noexcept { return N_; }
  std::uint64_t seed() const noexcept { return seed_; }

  double operator()(std::uint32_t i, std::uint32_t j) const noexcept { return entries_[static_cast<std::size_t>(j) * n_ + i]; }
  std::span<const double> column(std::uint32_t j) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(j) * n_, n_};
  }
  const std::vector<double>& entries() const noexcept { return entries_; }

  bool operator==(const MatrixSample&) const = default;

private:
  std::uint32_t n_;
  std::uint32_t N_;
  std::uint64_t seed_;
  std::vector<double> entries_;
};

/// Entry (i, j) is CounterRng(seed).normal(j*n + i) / sqrt(n).
inline MatrixSample sample_gaussian(std::uint32_t n, std::uint32_t N, std::uint64_t seed,
                                    std::uint64_t entry_cap = default_entry_cap) {
  if (n < 1 || n > N) throw domain_error("sample_gaussian: need 1 <= n <= N");
  const std::uint64_t count = static_cast<std::uint64_t>(n) * N;
  if (count > entry_cap)
    throw domain_error("sample_gaussian: n*N = " + std::to_string(count) + " exceeds entry cap " + std::to_string(entry_cap));
  const CounterRng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> e(count);
  for (std::uint64_t m = 0; m < count; ++m) e[m] = rng.normal(m) * scale;
  return MatrixSample(n, N, seed, std::move(e));
}

namespace detail {

template <class T>
void put_le(std::ostream& os, T v) {
  static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);
  unsigned char b[sizeof(T)];
  std::memcpy(b, &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
  os.write(reinterpret_cast<const char*>(b), sizeof(T));
}

template <class T>
T get_le(std::istream& is) {
  unsigned char b[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(b), sizeof(T))) throw domain_error("RICM: truncated input");
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
  T v;
  std::memcpy(&v, b, sizeof(T));
  return v;
}

}  // namespace detail

inline void write_ricm(std::ostream& os, const MatrixSample& a) {
  os.write("RICM", 4);
  detail::put_le<std::uint32_t>(os, a.rows());
  detail::put_le<std::uint32_t>(os, a.cols());
  for (double x : a.entries()) detail::put_le<double>(os, x);
  if (!os) throw domain_error("RICM: write failed");
}

/// The seed is not stored; the loaded sample carries `seed`.
inline MatrixSample read_ricm(std::istream& is, std::uint64_t seed = 0,
                              std::uint64_t entry_cap = default_entry_cap) {
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "RICM", 4) != 0) throw domain_error("RICM: bad magic");
  const auto n = detail::get_le<std::uint32_t>(is);
  const auto N = detail::get_le<std::uint32_t>(is);
  const std::uint64_t count = static_cast<std::uint64_t>(n) * N;
  if (count == 0 || count > entry_cap) throw domain_error("RICM: dimensions out of range");
  std::vector<double> e(count);
  for (auto& x : e) x = detail::get_le<double>(is);
  return MatrixSample(n, N, seed, std::move(e));
}

}  // namespace ricbounds

#endif  // RICBOUNDS_MATRIX_HPP
