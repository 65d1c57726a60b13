#ifndef RICBOUNDS_PROOF_CHECKS_HPP
#define RICBOUNDS_PROOF_CHECKS_HPP

// Numerical re-enactment of the two-part arguments behind the closed-form
// bounds. Part 1: the exponent at the slightly loosened bound is negative
// (the bound holds with overwhelming probability). Part 2: with a constant
// below the threshold and the bound slightly tightened, the exponent is
// non-negative (the tail inequality cannot certify anything smaller).

#include <cmath>
#include <string>
#include <vector>

#include "ricbounds/asymptotic_bounds.hpp"
#include "ricbounds/grid_point.hpp"
#include "ricbounds/scalar_kernels.hpp"

namespace ricbounds {

enum class Expect { negative, non_negative };

struct SignCheck {
  std::string name;
  double delta;
  double rho;
  double lambda;
  double value;  ///< Psi at lambda
  Expect expect;
  bool passed;
};

// Unperturbed bound locations lambda~ for each regime.
inline double lambda_tilde_max_small_rho(const GridPoint& pt, double c) {
  return 1.0 + bounds_small_rho(pt, c).upper;
}
inline double lambda_tilde_min_small_rho(const GridPoint& pt, double c) {
  return 1.0 - bounds_small_rho(pt, c).lower;
}
inline double lambda_tilde_max_small_delta(const GridPoint& pt, double c) {
  return 1.0 + bounds_small_delta(pt, c).upper;
}
inline double lambda_tilde_min_small_delta(const GridPoint& pt, double c) {
  return std::exp(*bounds_small_delta(pt, c).log_lower_gap);
}
inline double lambda_tilde_max_gamma(double delta, double gamma, double c_u) {
  return 1.0 + bounds_gamma_path(delta, gamma, c_u, 0.0).upper;
}
inline double lambda_tilde_min_gamma(double delta, double gamma, double c_l) {
  return 1.0 - bounds_gamma_path(delta, gamma, 0.0, c_l).lower;
}

inline SignCheck make_sign_check(std::string name, Side side, double lambda, const GridPoint& pt,
                                 Expect expect) {
  SignCheck s{std::move(name), pt.delta(), pt.rho(), lambda, 0.0, expect, false};
  if (!(lambda > 0.0)) return s;  // perturbed location left the exponent's domain
  s.value = big_psi(side, lambda, pt).value;
  s.passed = expect == Expect::negative ? s.value < 0.0 : s.value >= 0.0;
  return s;
}

/// The full sign-check suite on its fixed grids.
inline std::vector<SignCheck> regime_sign_checks() {
  std::vector<SignCheck> out;

  {  // delta fixed, rho -> 0: multiplicative (1 +- eps) slack
    const double delta = 0.25, eps = 0.1, c_hi = 6.5, c_lo = 5.0;
    for (double rho : {1e-6, 1e-5, 1e-4}) {
      const GridPoint pt(delta, rho);
      const double umax = lambda_tilde_max_small_rho(pt, c_hi);
      const double umin = lambda_tilde_min_small_rho(pt, c_hi);
      out.push_back(make_sign_check("small_rho part1 max (c=6.5)", Side::max, (1 + eps) * umax - eps, pt,
                                    Expect::negative));
      out.push_back(make_sign_check("small_rho part1 min (c=6.5)", Side::min, (1 + eps) * umin - eps, pt,
                                    Expect::negative));
      const double tmax = lambda_tilde_max_small_rho(pt, c_lo);
      const double tmin = lambda_tilde_min_small_rho(pt, c_lo);
      out.push_back(make_sign_check("small_rho part2 max (c=5)", Side::max, (1 - eps) * tmax + eps, pt,
                                    Expect::non_negative));
      out.push_back(make_sign_check("small_rho part2 min (c=5)", Side::min, (1 - eps) * tmin + eps, pt,
                                    Expect::non_negative));
    }
  }
  {  // rho fixed, delta -> 0: additive eps on the upper bound
    const double rho = 0.5, eps = 0.1;
    for (double delta : {1e-10, 1e-20, 1e-30}) {
      const GridPoint pt(delta, rho);
      out.push_back(make_sign_check("small_delta part1 max (c=1.5)", Side::max,
                                    lambda_tilde_max_small_delta(pt, 1.5) + eps, pt, Expect::negative));
      out.push_back(make_sign_check("small_delta part2 max (c=rho/2)", Side::max,
                                    lambda_tilde_max_small_delta(pt, rho / 2) - eps, pt, Expect::non_negative));
      out.push_back(make_sign_check("small_delta part2 min (c=0.5)", Side::min,
                                    (1 - eps) * lambda_tilde_min_small_delta(pt, 0.5) + eps, pt,
                                    Expect::non_negative));
    }
  }
  {  // gamma path
    const double gamma = 300.0, eps = 0.01;
    for (double delta : {1e-20, 1e-40, 1e-80}) {
      const GridPoint pt(delta, rho_gamma(delta, gamma));
      out.push_back(make_sign_check("gamma_path part1 max (c_u=0.4)", Side::max,
                                    lambda_tilde_max_gamma(delta, gamma, 0.4) + eps, pt, Expect::negative));
      out.push_back(make_sign_check("gamma_path part2 max (c_u=0.2)", Side::max,
                                    lambda_tilde_max_gamma(delta, gamma, 0.2) - eps, pt, Expect::non_negative));
      out.push_back(make_sign_check("gamma_path part1 min (c_l=0.4)", Side::min,
                                    lambda_tilde_min_gamma(delta, gamma, 0.4) - eps, pt, Expect::negative));
      out.push_back(make_sign_check("gamma_path part2 min (c_l=0.2)", Side::min,
                                    lambda_tilde_min_gamma(delta, gamma, 0.2) + eps, pt, Expect::non_negative));
    }
  }
  return out;
}

}  // namespace ricbounds

#endif  // RICBOUNDS_PROOF_CHECKS_HPP
