#ifndef RICBOUNDS_SCALAR_KERNELS_HPP
#define RICBOUNDS_SCALAR_KERNELS_HPP

// Shannon entropy and the Wishart large-deviation exponents that define the
// implicit RIC bounds. Natural logarithms throughout.

#include <cmath>
#include <string_view>

#include "ricbounds/errors.hpp"
#include "ricbounds/grid_point.hpp"

namespace ricbounds {

enum class Side { min, max };

inline std::string_view to_string(Side s) { return s == Side::min ? "min" : "max"; }

struct ExponentValue {
  double value;
  Side side;
};

/// H(p) = -p log p - (1-p) log(1-p).
///
/// The smaller of p, 1-p is used as the argument so that the (1-p) factor is
/// formed from the exactly representable complement, and log(1-p) goes
/// through log1p. Accurate to a few ulps for p anywhere in (0,1).
inline double shannon_entropy(double p) {
  if (!(p > 0.0 && p < 1.0)) throw domain_error("shannon_entropy: p must lie in (0,1)");
  const double q = 1.0 - p;
  // For p > 1/2, q is exact (Sterbenz) and H is evaluated from q.
  const double s = p <= 0.5 ? p : q;
  const double t = p <= 0.5 ? q : p;
  return -s * std::log(s) - t * std::log1p(-s);
}

namespace detail {

inline void check_rho(double rho, const char* who) {
  if (!(rho > 0.0 && rho < 1.0)) throw domain_error(std::string(who) + ": rho must lie in (0,1)");
}

// log(lambda) - (lambda - 1), with the lambda ~ 1 cancellation handled.
inline double log_minus_linear(double lambda) {
  if (lambda > 0.5 && lambda < 2.0) {
    const double u = lambda - 1.0;  // exact in this range
    return std::log1p(u) - u;
  }
  return std::log(lambda) - (lambda - 1.0);
}

}  // namespace detail

/// psi_min(lambda, rho) = H(rho) + 1/2[(1-rho) log lambda + 1 - rho + rho log rho - lambda].
inline double psi_min(double lambda, double rho) {
  if (!(lambda > 0.0)) throw domain_error("psi_min: lambda must be positive");
  detail::check_rho(rho, "psi_min");
  const double log_lambda = std::log(lambda);
  return shannon_entropy(rho) +
         0.5 * (detail::log_minus_linear(lambda) - rho * log_lambda - rho + rho * std::log(rho));
}

/// psi_min evaluated at lambda = exp(log_lambda); usable when lambda itself
/// underflows.
inline double psi_min_log(double log_lambda, double rho) {
  detail::check_rho(rho, "psi_min_log");
  if (!std::isfinite(log_lambda)) throw domain_error("psi_min_log: log_lambda must be finite");
  const double lmlin = log_lambda - std::expm1(log_lambda);
  return shannon_entropy(rho) + 0.5 * (lmlin - rho * log_lambda - rho + rho * std::log(rho));
}

/// psi_max(lambda, rho) = 1/2[(1+rho) log lambda + 1 + rho - rho log rho - lambda].
inline double psi_max(double lambda, double rho) {
  if (!(lambda > 0.0)) throw domain_error("psi_max: lambda must be positive");
  detail::check_rho(rho, "psi_max");
  const double log_lambda = std::log(lambda);
  return 0.5 * (detail::log_minus_linear(lambda) + rho * log_lambda + rho - rho * std::log(rho));
}

/// delta^{-1} H(delta rho), the union-bound term over the C(N,k) supports.
///
/// Written as rho [ -log delta - log rho + g(p) ] with p = delta rho and
/// g(p) = -(1-p) log(1-p) / p, so no division by a tiny delta occurs.
inline double union_entropy_rate(const GridPoint& pt) {
  const double p = pt.delta() * pt.rho();
  const double g = -(1.0 - p) * (std::log1p(-p) / p);
  return pt.rho() * (-std::log(pt.delta()) - std::log(pt.rho()) + g);
}

/// Psi_side(lambda, delta, rho) = psi_side(lambda, rho) + delta^{-1} H(delta rho).
inline ExponentValue big_psi(Side side, double lambda, const GridPoint& pt) {
  const double psi = side == Side::min ? psi_min(lambda, pt.rho()) : psi_max(lambda, pt.rho());
  return {psi + union_entropy_rate(pt), side};
}

/// Psi_min at lambda = exp(log_lambda).
inline double big_psi_min_log(double log_lambda, const GridPoint& pt) {
  return psi_min_log(log_lambda, pt.rho()) + union_entropy_rate(pt);
}

}  // namespace ricbounds

#endif  // RICBOUNDS_SCALAR_KERNELS_HPP
