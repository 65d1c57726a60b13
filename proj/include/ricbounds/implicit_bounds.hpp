#ifndef RICBOUNDS_IMPLICIT_BOUNDS_HPP
#define RICBOUNDS_IMPLICIT_BOUNDS_HPP

// The implicit Gaussian RIC bounds: L = 1 - lambda_min and U = lambda_max - 1,
// where lambda_min <= 1-rho and lambda_max >= 1+rho are the roots of
// Psi_min and Psi_max.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ricbounds/errors.hpp"
#include "ricbounds/grid_point.hpp"
#include "ricbounds/ric_pair.hpp"
#include "ricbounds/root_finding.hpp"
#include "ricbounds/scalar_kernels.hpp"

namespace ricbounds {

/// lambda_min is reported in linear coordinates only above this floor.
inline constexpr double lambda_min_floor = 1e-300;

/// Root of Psi_max on [1+rho, inf). The upper bracket starts at 2(1+rho) and
/// grows by cfg.bracket_growth until Psi_max turns negative.
inline RootResult solve_lambda_max(const GridPoint& pt, const SolverConfig& cfg = {}) {
  cfg.validate();
  const double rho = pt.rho();
  auto f = [&](double lambda) { return big_psi(Side::max, lambda, pt).value; };

  const double lo = 1.0 + rho;
  if (!(f(lo) > 0.0))
    throw solver_error("lambda_max: Psi_max(1+rho) <= 0; exponent kernel inconsistent", lo, lo);
  double hi = 2.0 * (1.0 + rho);
  while (!(f(hi) < 0.0)) {
    hi *= cfg.bracket_growth;
    if (!(hi < 1e300)) throw solver_error("lambda_max: no sign change below 1e300", lo, hi);
  }
  return find_root(f, lo, hi, cfg);
}

/// Root of Psi_min on (0, 1-rho], solved for t = log(lambda) so that roots far
/// below the smallest double (delta -> 0, rho -> 1) stay representable. The
/// lower bracket lambda_lo = (1-rho) 2^{-g^j} for j = 0, 1, ... with
/// g = cfg.bracket_growth.
inline RootResult solve_log_lambda_min(const GridPoint& pt, const SolverConfig& cfg = {}) {
  cfg.validate();
  auto f = [&](double t) { return big_psi_min_log(t, pt); };

  const double hi = std::log1p(-pt.rho());
  if (!(f(hi) > 0.0))
    throw solver_error("lambda_min: Psi_min(1-rho) <= 0; exponent kernel inconsistent", hi, hi);
  double step = std::numbers::ln2;
  double lo = hi - step;
  while (!(f(lo) < 0.0)) {
    step *= cfg.bracket_growth;
    lo = hi - step;
    if (!(lo > -1e7)) throw solver_error("lambda_min: no sign change above log(lambda) = -1e7", lo, hi);
  }
  return find_root(f, lo, hi, cfg);
}

inline double lambda_max(const GridPoint& pt, const SolverConfig& cfg = {}) {
  return solve_lambda_max(pt, cfg).x;
}

/// log(lambda_min); finite for every admissible point.
inline double log_lambda_min(const GridPoint& pt, const SolverConfig& cfg = {}) {
  return solve_log_lambda_min(pt, cfg).x;
}

/// lambda_min in linear coordinates. Throws solver_error when the root lies
/// below lambda_min_floor (use log_lambda_min there).
inline double lambda_min(const GridPoint& pt, const SolverConfig& cfg = {}) {
  const auto r = solve_log_lambda_min(pt, cfg);
  if (r.x < std::log(lambda_min_floor))
    throw solver_error("lambda_min: root below the 1e-300 underflow guard", r.x, r.x);
  return std::exp(r.x);
}

/// The implicit pair (L, U) at a grid point.
inline RicPair ric_bounds(const GridPoint& pt, const SolverConfig& cfg = {}) {
  const auto up = solve_lambda_max(pt, cfg);
  const auto low = solve_log_lambda_min(pt, cfg);
  RicPair out;
  out.method = Method::implicit;
  out.upper = up.x - 1.0;
  out.lower = -std::expm1(low.x);
  out.log_lower_gap = low.x;
  out.residual = std::max(up.residual, low.residual);
  return out;
}

/// Exponent 2n Psi_side(lambda, delta, rho) of the tail bound on the extreme
/// sparse eigenvalues. The polynomial prefactor is not computed.
inline double tail_exponent(Side side, double lambda, const GridPoint& pt, long long n) {
  if (n < 1) throw domain_error("tail_exponent: n must be >= 1");
  return 2.0 * static_cast<double>(n) * big_psi(side, lambda, pt).value;
}

}  // namespace ricbounds

#endif  // RICBOUNDS_IMPLICIT_BOUNDS_HPP
