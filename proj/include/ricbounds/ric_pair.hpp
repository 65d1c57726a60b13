#ifndef RICBOUNDS_RIC_PAIR_HPP
#define RICBOUNDS_RIC_PAIR_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ricbounds {

enum class Method { implicit, small_rho, small_delta, gamma_path, gamma_limit };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::implicit: return "implicit";
    case Method::small_rho: return "small_rho";
    case Method::small_delta: return "small_delta";
    case Method::gamma_path: return "gamma_path";
    case Method::gamma_limit: return "gamma_limit";
  }
  return "?";
}

/// A lower-RIC bound and an upper-RIC bound.
///
/// `lower` is rounded to double; when the lower bound is within 1e-16 of one
/// it saturates, and `log_lower_gap` = log(1 - lower) still carries the exact
/// distance from one. `residual` is the larger |Psi| of the two implicit
/// roots (0 for closed-form methods). `warnings` lists regime violations.
struct RicPair {
  double lower = 0.0;
  double upper = 0.0;
  Method method = Method::implicit;
  double residual = 0.0;
  std::optional<double> log_lower_gap;
  std::vector<std::string> warnings;

  /// 1 - lower, exact even when `lower` has saturated.
  double lower_gap() const {
    return log_lower_gap ? std::exp(*log_lower_gap) : 1.0 - lower;
  }
};

/// |a.lower - b.lower| using the log gaps when both sides carry one, so that
/// two lower bounds saturated at one still compare meaningfully.
inline double lower_abs_difference(const RicPair& a, const RicPair& b) {
  if (a.log_lower_gap && b.log_lower_gap) {
    const double hi = std::max(*a.log_lower_gap, *b.log_lower_gap);
    const double lo = std::min(*a.log_lower_gap, *b.log_lower_gap);
    return std::exp(hi) * -std::expm1(lo - hi);
  }
  return std::abs(a.lower - b.lower);
}

}  // namespace ricbounds

#endif  // RICBOUNDS_RIC_PAIR_HPP
