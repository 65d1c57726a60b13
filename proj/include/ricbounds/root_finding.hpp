#ifndef RICBOUNDS_ROOT_FINDING_HPP
#define RICBOUNDS_ROOT_FINDING_HPP

#include <cmath>
#include <string>

#include "ricbounds/errors.hpp"

namespace ricbounds {

struct SolverConfig {
  double tolerance = 1e-12;  ///< bound on |f| at the returned root
  int max_iterations = 200;
  double bracket_growth = 2.0;  ///< expansion factor while searching for a sign change

  void validate() const {
    if (!(tolerance > 0.0)) throw domain_error("SolverConfig: tolerance must be positive");
    if (max_iterations < 1) throw domain_error("SolverConfig: max_iterations must be >= 1");
    if (!(bracket_growth > 1.0)) throw domain_error("SolverConfig: bracket_growth must exceed 1");
  }
};

struct RootResult {
  double x;
  double residual;  ///< |f(x)|
  int iterations;
};

/// Bisection with secant acceleration on a sign-changing bracket [lo, hi].
///
/// The secant iterate is used only when it falls strictly inside the bracket
/// and the previous step at least halved the bracket; otherwise the midpoint
/// is taken, so the width halves at least every second iteration. Iteration
/// continues until the bracket collapses to adjacent doubles (or f hits zero)
/// and the endpoint with the smaller |f| is returned; it must satisfy
/// |f| <= tolerance. f is never evaluated outside [lo, hi].
template <class F>
RootResult find_root(F&& f, double lo, double hi, const SolverConfig& cfg) {
  cfg.validate();
  if (!(lo < hi)) throw solver_error("find_root: empty bracket", lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if (std::signbit(flo) == std::signbit(fhi))
    throw solver_error("find_root: endpoints do not bracket a sign change", lo, hi);

  bool allow_secant = true;
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // adjacent doubles

    double x = mid;
    if (allow_secant) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    const double width = hi - lo;
    const double fx = f(x);
    if (fx == 0.0) return {x, 0.0, it + 1};
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    allow_secant = (hi - lo) <= 0.5 * width;
  }

  const bool lo_better = std::abs(flo) <= std::abs(fhi);
  RootResult best{lo_better ? lo : hi, std::abs(lo_better ? flo : fhi), it};
  if (best.residual <= cfg.tolerance) return best;
  if (it >= cfg.max_iterations)
    throw solver_error("find_root: no convergence after " + std::to_string(it) + " iterations", lo, hi);
  throw solver_error("find_root: bracket collapsed with residual above tolerance", lo, hi);
}

}  // namespace ricbounds

#endif  // RICBOUNDS_ROOT_FINDING_HPP
