#ifndef RICBOUNDS_JACOBI_HPP
#define RICBOUNDS_JACOBI_HPP

// Extreme eigenvalues of small Gram matrices A_K^T A_K by cyclic Jacobi.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ricbounds/errors.hpp"
#include "ricbounds/matrix.hpp"

namespace ricbounds {

inline constexpr int jacobi_sweep_cap = 64;
inline constexpr double jacobi_offdiag_tol = 1e-12;

/// Row-major k x k Gram matrix of the listed columns. Entry (a, b) and
/// (b, a) come from the same dot product, so the result is exactly symmetric.
inline std::vector<double> gram_matrix(const MatrixSample& a, std::span<const std::uint32_t> support) {
  const std::size_t k = support.size();
  std::vector<double> g(k * k);
  for (std::size_t p = 0; p < k; ++p) {
    const auto cp = a.column(support[p]);
    for (std::size_t q = p; q < k; ++q) {
      const auto cq = a.column(support[q]);
      double s = 0.0;
      for (std::size_t i = 0; i < cp.size(); ++i) s += cp[i] * cq[i];
      g[p * k + q] = s;
      g[q * k + p] = s;
    }
  }
  return g;
}

/// (lambda_min, lambda_max) of a symmetric row-major k x k matrix, modified
/// in place. Stops when the off-diagonal Frobenius norm is at most
/// jacobi_offdiag_tol times the full Frobenius norm.
inline std::pair<double, double> symmetric_extremes(std::vector<double>& g, std::size_t k) {
  if (k == 0 || g.size() != k * k) throw domain_error("symmetric_extremes: bad matrix shape");
  auto off2 = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q)
        if (p != q) s += g[p * k + q] * g[p * k + q];
    return s;
  };
  double total2 = 0.0;
  for (double x : g) total2 += x * x;
  const double target2 = jacobi_offdiag_tol * jacobi_offdiag_tol * total2;

  int sweep = 0;
  while (off2() > target2) {
    if (++sweep > jacobi_sweep_cap) throw solver_error("symmetric_extremes: Jacobi did not converge within sweep cap");
    for (std::size_t p = 0; p + 1 < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        const double apq = g[p * k + q];
        if (apq == 0.0) continue;
        const double app = g[p * k + p];
        const double aqq = g[q * k + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        for (std::size_t r = 0; r < k; ++r) {
          const double grp = g[r * k + p];
          const double grq = g[r * k + q];
          g[r * k + p] = c * grp - s * grq;
          g[r * k + q] = s * grp + c * grq;
        }
        for (std::size_t r = 0; r < k; ++r) {
          const double gpr = g[p * k + r];
          const double gqr = g[q * k + r];
          g[p * k + r] = c * gpr - s * gqr;
          g[q * k + r] = s * gpr + c * gqr;
        }
        g[p * k + q] = 0.0;
        g[q * k + p] = 0.0;
      }
    }
  }
  double lo = g[0];
  double hi = g[0];
  for (std::size_t p = 1; p < k; ++p) {
    lo = std::min(lo, g[p * k + p]);
    hi = std::max(hi, g[p * k + p]);
  }
  return {lo, hi};
}

/// (lambda_min, lambda_max) of A_K^T A_K. For k = 1 both are the squared
/// column norm.
inline std::pair<double, double> gram_extremes(const MatrixSample& a, std::span<const std::uint32_t> support) {
  if (support.empty()) throw domain_error("gram_extremes: empty support");
  if (support.size() > a.rows()) throw domain_error("gram_extremes: k exceeds n");
  for (auto j : support)
    if (j >= a.cols()) throw domain_error("gram_extremes: column index out of range");
  auto g = gram_matrix(a, support);
  if (support.size() == 1) return {g[0], g[0]};
  return symmetric_extremes(g, support.size());
}

}  // namespace ricbounds

#endif  // RICBOUNDS_JACOBI_HPP
