#ifndef RICBOUNDS_ERRORS_HPP
#define RICBOUNDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ricbounds {

/// Argument outside the mathematical domain of a formula or kernel.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Root-finding or iteration failure (bracketing, non-convergence, underflow).
class solver_error : public std::runtime_error {
public:
  solver_error(const std::string& what, double lo = 0.0, double hi = 0.0)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}

  /// Last bracket held when the solver gave up.
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

private:
  double lo_;
  double hi_;
};

/// A problem with no admissible answer in the searched range.
class infeasible_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ricbounds

#endif  // RICBOUNDS_ERRORS_HPP
