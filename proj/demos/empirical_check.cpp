// Empirical RICs of a few sampled matrices next to the implicit bounds.

#include <cstdint>
#include <iostream>

#include "ricbounds.hpp"

using namespace ricbounds;

int main() {
  struct Case {
    std::uint32_t n, N, k;
    EnumerationMode mode;
  };
  const Case cases[] = {
      {20, 40, 2, EnumerationMode::exhaustive},
      {24, 48, 3, EnumerationMode::exhaustive},
      {60, 240, 6, EnumerationMode::monte_carlo},
  };
  for (const auto& c : cases) {
    const auto a = sample_gaussian(c.n, c.N, 2024);
    const auto est = empirical_ric(a, c.k, c.mode, 20000, 7);
    const auto bounds = ric_bounds(to_grid_point(est.size));
    std::cout << "n=" << c.n << " N=" << c.N << " k=" << c.k << " (" << to_string(est.mode) << ", "
              << est.subsets_evaluated << " supports)\n"
              << validation_report(est, bounds).to_text() << '\n';
  }
}
