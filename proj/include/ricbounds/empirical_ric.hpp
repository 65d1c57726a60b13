#ifndef RICBOUNDS_EMPIRICAL_RIC_HPP
#define RICBOUNDS_EMPIRICAL_RIC_HPP

// Empirical lower/upper RICs of a sampled matrix:
//   lower_hat = 1 - min_K lambda_min(A_K^T A_K)
//   upper_hat = max_K lambda_max(A_K^T A_K) - 1
// over all k-supports (exhaustive) or a random batch of distinct supports.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ricbounds/combinations.hpp"
#include "ricbounds/errors.hpp"
#include "ricbounds/jacobi.hpp"
#include "ricbounds/matrix.hpp"
#include "ricbounds/parallel.hpp"
#include "ricbounds/ric_pair.hpp"
#include "ricbounds/rng.hpp"
#include "ricbounds/sampling_theorems.hpp"

namespace ricbounds {

enum class EnumerationMode { exhaustive, monte_carlo };

inline std::string_view to_string(EnumerationMode m) {
  return m == EnumerationMode::exhaustive ? "exhaustive" : "monte_carlo";
}

struct EmpiricalEstimate {
  double lower_hat = 0.0;
  double upper_hat = 0.0;
  EnumerationMode mode = EnumerationMode::exhaustive;
  std::uint64_t subsets_evaluated = 0;
  std::uint64_t seed = 0;
  ProblemSize size{1, 1, 1};
  std::vector<std::string> warnings;  // set when lower_hat >= 1
};

struct EmpiricalOptions {
  std::uint64_t exhaustive_cap = 1'000'000;
  unsigned threads = 0;  // 0: default_thread_count()
};

namespace detail {

struct Extremes {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void merge(std::pair<double, double> e) {
    lo = std::min(lo, e.first);
    hi = std::max(hi, e.second);
  }
  void merge(const Extremes& o) {
    lo = std::min(lo, o.lo);
    hi = std::max(hi, o.hi);
  }
};

/// Seed of the support-sampling stream, decorrelated from the matrix stream.
inline std::uint64_t support_stream_seed(std::uint64_t seed) { return splitmix64_mix(seed ^ 0x5355505045525453ULL); }

/// `count` distinct sorted k-supports of [0, N). Each support takes k
/// distinct indices from successive below(N) words, rejecting repeats;
/// a support already in the batch is rejected and redrawn.
inline std::vector<std::vector<std::uint32_t>> draw_supports(std::uint32_t N, std::uint32_t k, std::uint64_t count,
                                                             std::uint64_t seed) {
  RngCursor cur(support_stream_seed(seed));
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(count);
  std::vector<std::uint32_t> s;
  while (out.size() < count) {
    s.clear();
    while (s.size() < k) {
      const auto j = static_cast<std::uint32_t>(cur.below(N));
      if (std::find(s.begin(), s.end(), j) == s.end()) s.push_back(j);
    }
    std::sort(s.begin(), s.end());
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// Exhaustive mode enumerates all C(N, k) supports in lexicographic order
/// and ignores budget and seed. Monte-Carlo mode evaluates
/// min(budget, C(N, k)) distinct supports drawn from `seed`.
inline EmpiricalEstimate empirical_ric(const MatrixSample& a, std::uint32_t k, EnumerationMode mode,
                                       std::uint64_t budget, std::uint64_t seed, const EmpiricalOptions& opt = {}) {
  const std::uint32_t n = a.rows();
  const std::uint32_t N = a.cols();
  if (k < 1 || k > n) throw domain_error("empirical_ric: need 1 <= k <= n");
  const std::uint64_t total = binomial(N, k);
  const unsigned threads = opt.threads ? opt.threads : default_thread_count();

  EmpiricalEstimate est;
  est.mode = mode;
  est.seed = seed;
  est.size = ProblemSize(k, n, N);

  std::vector<detail::Extremes> partial(std::max(1u, threads));
  if (mode == EnumerationMode::exhaustive) {
    if (total > opt.exhaustive_cap)
      throw domain_error("empirical_ric: C(N,k) = " + std::to_string(total) + " exceeds exhaustive cap " +
                         std::to_string(opt.exhaustive_cap));
    parallel_blocks(total, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
      auto c = unrank_combination(begin, N, k);
      for (std::size_t r = begin; r < end; ++r) {
        partial[w].merge(gram_extremes(a, c));
        next_combination(c, N);
      }
    });
    est.subsets_evaluated = total;
  } else {
    if (budget == 0) throw domain_error("empirical_ric: monte_carlo budget must be positive");
    const auto supports = detail::draw_supports(N, k, std::min(budget, total), seed);
    parallel_blocks(supports.size(), threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) partial[w].merge(gram_extremes(a, supports[r]));
    });
    est.subsets_evaluated = supports.size();
  }

  detail::Extremes all;
  for (const auto& p : partial) all.merge(p);
  est.lower_hat = 1.0 - all.lo;
  est.upper_hat = all.hi - 1.0;
  if (!(est.lower_hat < 1.0)) est.warnings.push_back("lower_hat >= 1: some sampled submatrix is rank deficient");
  return est;
}

struct ValidationLine {
  std::string side;  // "lower" or "upper"
  double empirical;
  double bound;
  double slack;      // bound - empirical
  bool consistent;   // empirical <= bound
  std::string status;
};

struct ValidationReport {
  ValidationLine lower;
  ValidationLine upper;

  bool consistent() const { return lower.consistent && upper.consistent; }
  std::string to_text() const;
};

inline constexpr std::string_view status_consistent = "consistent";
inline constexpr std::string_view status_exceeds = "exceeds (asymptotic bound; finite-n excursion)";

inline ValidationReport validation_report(const EmpiricalEstimate& est, const RicPair& bounds) {
  auto line = [](std::string side, double e, double b) {
    const bool ok = e <= b;
    return ValidationLine{std::move(side), e, b, b - e, ok, std::string(ok ? status_consistent : status_exceeds)};
  };
  return {line("lower", est.lower_hat, bounds.lower), line("upper", est.upper_hat, bounds.upper)};
}

inline std::string ValidationReport::to_text() const {
  std::ostringstream os;
  os << std::left << std::setprecision(10);
  os << std::setw(7) << "side" << std::setw(18) << "empirical" << std::setw(18) << "bound" << std::setw(18) << "slack"
     << "status\n";
  for (const auto* l : {&lower, &upper})
    os << std::setw(7) << l->side << std::setw(18) << l->empirical << std::setw(18) << l->bound << std::setw(18)
       << l->slack << l->status << '\n';
  return os.str();
}

}  // namespace ricbounds

#endif  // RICBOUNDS_EMPIRICAL_RIC_HPP
