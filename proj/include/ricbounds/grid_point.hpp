#ifndef RICBOUNDS_GRID_POINT_HPP
#define RICBOUNDS_GRID_POINT_HPP

#include <cmath>
#include <string>

#include "ricbounds/errors.hpp"

namespace ricbounds {

/// An admissible (delta, rho) pair: delta = n/N and rho = k/n, both in (0,1).
///
/// Construction validates the point, so every function taking a GridPoint
/// may assume 0 < delta < 1, 0 < rho < 1 and delta*rho < 1.
class GridPoint {
public:
  GridPoint(double delta, double rho) : delta_(delta), rho_(rho) {
    if (!(delta > 0.0 && delta < 1.0))
      throw domain_error("GridPoint: delta must lie in (0,1), got " + std::to_string(delta));
    if (!(rho > 0.0 && rho < 1.0))
      throw domain_error("GridPoint: rho must lie in (0,1), got " + std::to_string(rho));
    if (!(delta * rho > 0.0))
      throw domain_error("GridPoint: delta*rho underflows");
  }

  double delta() const noexcept { return delta_; }
  double rho() const noexcept { return rho_; }

  /// log(1/(delta^2 rho^3)) assembled from the logs of the inputs, so that
  /// delta = 1e-300 neither overflows nor underflows.
  double log_inv_d2r3() const noexcept { return -2.0 * std::log(delta_) - 3.0 * std::log(rho_); }

  friend bool operator==(const GridPoint&, const GridPoint&) = default;

private:
  double delta_;
  double rho_;
};

}  // namespace ricbounds

#endif  // RICBOUNDS_GRID_POINT_HPP
