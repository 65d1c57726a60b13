// Minimal measurement counts n for OMP over a table of (k, N).

#include <cstdint>
#include <iomanip>
#include <iostream>

#include "ricbounds.hpp"

using namespace ricbounds;

int main() {
  const std::int64_t dims[] = {1'000, 10'000, 100'000, 1'000'000};
  std::cout << std::setw(4) << "k";
  for (auto N : dims) std::cout << std::setw(12) << ("N=" + std::to_string(N));
  std::cout << '\n';
  for (std::int64_t k = 2; k <= 8; ++k) {
    std::cout << std::setw(4) << k;
    for (auto N : dims) {
      try {
        std::cout << std::setw(12) << omp_min_measurements(k, N);
      } catch (const infeasible_error&) {
        std::cout << std::setw(12) << "-";
      }
    }
    std::cout << '\n';
  }

  // Same question posed through the gamma path: smallest gamma whose limiting
  // bounds meet the k = 5 OMP condition.
  const RecoveryCondition omp5{[](double l, double u) { return omp_condition(l, u, 5); }, "OMP, k = 5"};
  std::cout << "\nmin gamma for " << omp5.description << ": " << min_gamma(omp5, 1.0 / 3, 1.0 / 3, 1e-6) << '\n';
}
