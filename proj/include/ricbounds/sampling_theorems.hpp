#ifndef RICBOUNDS_SAMPLING_THEOREMS_HPP
#define RICBOUNDS_SAMPLING_THEOREMS_HPP

// From RIC bounds to compressed-sensing sampling statements.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ricbounds/asymptotic_bounds.hpp"
#include "ricbounds/errors.hpp"
#include "ricbounds/grid_point.hpp"

namespace ricbounds {

/// Sparsity k, measurements n, ambient dimension N with 1 <= k <= n <= N.
struct ProblemSize {
  std::int64_t k;
  std::int64_t n;
  std::int64_t N;

  ProblemSize(std::int64_t k_, std::int64_t n_, std::int64_t N_) : k(k_), n(n_), N(N_) {
    if (!(1 <= k && k <= n && n <= N)) throw domain_error("ProblemSize: need 1 <= k <= n <= N");
  }
};

/// (delta, rho) = (n/N, k/n). Throws when the ratios are not admissible
/// (k = n or n = N).
inline GridPoint to_grid_point(const ProblemSize& s) {
  return GridPoint(static_cast<double>(s.n) / static_cast<double>(s.N),
                   static_cast<double>(s.k) / static_cast<double>(s.n));
}

/// A sufficient RIC condition for some recovery algorithm. The predicate
/// takes (lower, upper) and must be monotone: passing at (L, U) implies
/// passing at any (L', U') with L' <= L and U' <= U. Must be reentrant.
struct RecoveryCondition {
  std::function<bool(double lower, double upper)> predicate;
  std::string description;

  bool operator()(double lower, double upper) const { return predicate(lower, upper); }
};

/// OMP k-step condition: max(L, U) < 1/sqrt(k-1).
inline bool omp_condition(double lower, double upper, std::int64_t k) {
  if (k < 2) throw domain_error("omp_condition: k must be >= 2");
  return std::max(lower, upper) < 1.0 / std::sqrt(static_cast<double>(k - 1));
}

/// max(L, U) < threshold, as a RecoveryCondition.
inline RecoveryCondition max_ric_below(double threshold) {
  return {[threshold](double l, double u) { return std::max(l, u) < threshold; },
          "max(L,U) < " + std::to_string(threshold)};
}

/// Right-hand side of the OMP measurement condition,
/// 2k(k-1)[3 + 2 log N + log n - 3 log k], at real-valued n.
inline double omp_measurement_rhs(std::int64_t k, std::int64_t N, double n) {
  const double kd = static_cast<double>(k);
  return 2.0 * kd * (kd - 1.0) * (3.0 + 2.0 * std::log(static_cast<double>(N)) + std::log(n) - 3.0 * std::log(kd));
}

inline bool omp_measurements_sufficient(std::int64_t k, std::int64_t N, std::int64_t n) {
  return static_cast<double>(n) > omp_measurement_rhs(k, N, static_cast<double>(n));
}

/// Smallest integer n in [k, N] with n > 2k(k-1)[3 + 2 log N + log n - 3 log k].
///
/// g(n) = n - rhs(n) is convex, so on [k, N] the feasible set is an initial
/// segment (only if g(k) > 0) or the tail beyond the larger root. That root
/// is found by the fixed-point iteration n <- rhs(n) started from N (a
/// contraction there since rhs'(n) = 2k(k-1)/n < 1), then the integer
/// answer is settled by scanning two either side.
inline std::int64_t omp_min_measurements(std::int64_t k, std::int64_t N) {
  if (k < 2) throw domain_error("omp_min_measurements: k must be >= 2");
  if (!(N > k)) throw domain_error("omp_min_measurements: N must exceed k");
  if (omp_measurements_sufficient(k, N, k)) return k;
  if (!omp_measurements_sufficient(k, N, N))
    throw infeasible_error("omp_min_measurements: no n <= N satisfies the condition");

  double n = static_cast<double>(N);
  bool converged = false;
  for (int it = 0; it < 10000; ++it) {
    const double next = omp_measurement_rhs(k, N, n);
    if (std::abs(next - n) <= 1e-12 * n) {
      n = next;
      converged = true;
      break;
    }
    n = next;
  }
  if (!converged) throw solver_error("omp_min_measurements: fixed-point iteration did not converge", n, n);

  const auto base = static_cast<std::int64_t>(std::floor(n));
  for (std::int64_t cand = std::max(k, base - 2); cand <= std::min(N, base + 2); ++cand) {
    if (omp_measurements_sufficient(k, N, cand) &&
        (cand == k || !omp_measurements_sufficient(k, N, cand - 1)))
      return cand;
  }
  throw solver_error("omp_min_measurements: integer refinement found no minimal n near the fixed point", n, n);
}

struct MinGammaOptions {
  double gamma_floor = 4.0;
  double gamma_ceiling = 1e8;
  /// When set, evaluate the gamma-path bounds at this delta instead of the
  /// delta -> 0 limit.
  std::optional<double> path_delta;
};

/// Bounds used by min_gamma at a given gamma.
inline RicPair min_gamma_bounds(double gamma, double c_u, double c_l, const MinGammaOptions& opt) {
  if (opt.path_delta) return bounds_gamma_path(*opt.path_delta, gamma, c_u, c_l);
  return gamma_limit_bounds(gamma, c_u, c_l);
}

/// Smallest gamma (to within `resolution`) at which `cond` passes on the
/// gamma-path bounds; both bounds decrease in gamma, so bisection applies.
/// Returns the floor when the condition already passes there.
inline double min_gamma(const RecoveryCondition& cond, double c_u, double c_l, double resolution,
                        const MinGammaOptions& opt = {}) {
  if (!(resolution > 0.0)) throw domain_error("min_gamma: resolution must be positive");
  auto passes = [&](double g) {
    const auto b = min_gamma_bounds(g, c_u, c_l, opt);
    return cond(b.lower, b.upper);
  };
  double lo = opt.gamma_floor;
  double hi = opt.gamma_ceiling;
  if (passes(lo)) return lo;
  if (!passes(hi))
    throw infeasible_error("min_gamma: condition fails for every gamma up to " + std::to_string(hi));
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    (passes(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace ricbounds

#endif  // RICBOUNDS_SAMPLING_THEOREMS_HPP
