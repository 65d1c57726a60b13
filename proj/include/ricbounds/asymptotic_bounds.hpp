#ifndef RICBOUNDS_ASYMPTOTIC_BOUNDS_HPP
#define RICBOUNDS_ASYMPTOTIC_BOUNDS_HPP

// Closed-form RIC bounds in three asymptotic regimes:
//   small_rho    delta fixed, rho -> 0
//   small_delta  rho fixed, delta -> 0
//   gamma_path   rho = 1/(gamma log(1/delta)), delta -> 0, and its delta -> 0 limit.
// Regime guards add warnings to the returned pair; they never refuse.

#include <cmath>
#include <string>

#include "ricbounds/errors.hpp"
#include "ricbounds/grid_point.hpp"
#include "ricbounds/ric_pair.hpp"

namespace ricbounds {

struct RegimeConstants {
  double c = 6.0;
  double c_u = 1.0 / 3.0;
  double c_l = 1.0 / 3.0;
  double gamma = 300.0;
  double epsilon = 0.1;

  bool small_rho_valid() const { return c > 6.0; }
  bool small_delta_valid() const { return c > 1.0; }
  bool gamma_path_valid() const { return c_u > 1.0 / 3.0 && c_l < 1.0 / 3.0 && gamma > 4.0; }
};

/// How to read the lower gamma-path formula. `corollary_consistent` uses
/// sqrt(x) - c_l x with the same x = 2 rho log(1/(delta^2 rho^3)) + 6 rho as the
/// upper bound, which is what the delta -> 0 limit 2/sqrt(gamma) - 4 c_l/gamma
/// follows from. `literal` uses c_l [rho log(1/(delta^2 rho^3)) + 6 rho].
enum class LowerReading { corollary_consistent, literal };

namespace detail {

inline void warn_if(RicPair& p, bool cond, std::string msg) {
  if (cond) p.warnings.push_back(std::move(msg));
}

inline void warn_lower_range(RicPair& p) {
  warn_if(p, !(p.lower >= 0.0 && p.lower < 1.0),
          "lower bound formula outside [0,1); point is outside the formula's regime");
}

}  // namespace detail

/// sqrt(2 rho log(1/(delta^2 rho^3)) + c rho) for both bounds.
inline RicPair bounds_small_rho(const GridPoint& pt, double c) {
  const double lg = pt.log_inv_d2r3();
  if (!(lg > 0.0)) throw domain_error("bounds_small_rho: delta^2 rho^3 must be < 1");
  const double rho = pt.rho();
  const double arg = 2.0 * rho * lg + c * rho;
  if (!(arg >= 0.0)) throw domain_error("bounds_small_rho: negative radicand");
  RicPair p;
  p.method = Method::small_rho;
  p.upper = std::sqrt(arg);
  p.lower = p.upper;
  if (p.lower < 1.0) p.log_lower_gap = std::log1p(-p.lower);
  detail::warn_if(p, !(c > 6.0), "small_rho: c <= 6 is outside the theorem's constant range");
  detail::warn_lower_range(p);
  return p;
}

/// upper = rho lg + (1+rho) log(c lg) + 3 rho,
/// lower = 1 - exp(-(3 rho + c)/(1-rho)) (delta^2 rho^3)^{rho/(1-rho)},
/// with lg = log(1/(delta^2 rho^3)). The lower bound is kept in log space.
inline RicPair bounds_small_delta(const GridPoint& pt, double c) {
  const double lg = pt.log_inv_d2r3();
  const double rho = pt.rho();
  const double inner = c * lg;
  if (!(inner > 1.0)) throw domain_error("bounds_small_delta: c log(1/(delta^2 rho^3)) must exceed 1");
  RicPair p;
  p.method = Method::small_delta;
  p.upper = rho * lg + (1.0 + rho) * std::log(inner) + 3.0 * rho;
  const double log_gap = -(3.0 * rho + c) / (1.0 - rho) - (rho / (1.0 - rho)) * lg;
  p.log_lower_gap = log_gap;
  p.lower = -std::expm1(log_gap);
  detail::warn_if(p, !(c > 1.0), "small_delta: c <= 1 is outside the theorem's constant range");
  return p;
}

/// rho_gamma(delta) = 1/(gamma log(1/delta)).
inline double rho_gamma(double delta, double gamma) {
  if (!(delta > 0.0 && delta < 1.0)) throw domain_error("rho_gamma: delta must lie in (0,1)");
  if (!(gamma > 0.0)) throw domain_error("rho_gamma: gamma must be positive");
  return 1.0 / (gamma * -std::log(delta));
}

/// Bounds along rho = rho_gamma(delta): with x = 2 rho lg + 6 rho,
/// upper = sqrt(x) + c_u x and lower = sqrt(x) - c_l x (see LowerReading).
inline RicPair bounds_gamma_path(double delta, double gamma, double c_u, double c_l,
                                 LowerReading reading = LowerReading::corollary_consistent) {
  const double rho = rho_gamma(delta, gamma);
  if (!(rho < 1.0)) throw domain_error("bounds_gamma_path: rho_gamma(delta) must be < 1");
  const double lg = -2.0 * std::log(delta) - 3.0 * std::log(rho);
  const double x = 2.0 * rho * lg + 6.0 * rho;
  RicPair p;
  p.method = Method::gamma_path;
  p.upper = std::sqrt(x) + c_u * x;
  const double lower_term = reading == LowerReading::literal ? rho * lg + 6.0 * rho : x;
  p.lower = std::sqrt(x) - c_l * lower_term;
  if (p.lower < 1.0) p.log_lower_gap = std::log1p(-p.lower);
  detail::warn_if(p, !(gamma > 4.0), "gamma_path: gamma <= 4 is outside the theorem's range");
  detail::warn_if(p, !(c_u > 1.0 / 3.0), "gamma_path: c_u <= 1/3 is outside the theorem's range");
  detail::warn_if(p, !(c_l < 1.0 / 3.0), "gamma_path: c_l >= 1/3 is outside the theorem's range");
  if (reading == LowerReading::literal)
    p.warnings.push_back("gamma_path: literal lower reading does not reproduce the delta -> 0 limit");
  detail::warn_lower_range(p);
  return p;
}

/// delta -> 0 limit of the gamma-path bounds: 2/sqrt(gamma) +- 4 c/gamma.
inline RicPair gamma_limit_bounds(double gamma, double c_u, double c_l) {
  if (!(gamma > 0.0)) throw domain_error("gamma_limit_bounds: gamma must be positive");
  RicPair p;
  p.method = Method::gamma_limit;
  p.upper = 2.0 / std::sqrt(gamma) + 4.0 * c_u / gamma;
  p.lower = 2.0 / std::sqrt(gamma) - 4.0 * c_l / gamma;
  if (p.lower < 1.0) p.log_lower_gap = std::log1p(-p.lower);
  detail::warn_lower_range(p);
  return p;
}

}  // namespace ricbounds

#endif  // RICBOUNDS_ASYMPTOTIC_BOUNDS_HPP
