#ifndef RICBOUNDS_LEMMAS_HPP
#define RICBOUNDS_LEMMAS_HPP

// Executable form of the elementary logarithm / entropy inequalities that the
// asymptotic proofs lean on. Each inequality is evaluated as a signed slack
// (>= 0 means the inequality holds at that sample).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ricbounds/errors.hpp"

namespace ricbounds {

enum class Lemma {
  shannon_bounds,   // -x log x + x - x^2 < H(x) < -x log x + x
  logmono_ubound,   // -(1-x) log(1-x) < x,            x in (0,1)
  logmm_lbound,     // -log(1-x) > x,                  x < 1, x != 0
  logp_ubound,      // log(1+x) <= x, log(1+x) <= x - x^2/2 + x^3/3,  x > -1
  r_pfrac_series,   // 1/(1+x) < 1,                    0 < x < 1
  logm_ubound,      // log(1-x) <= -x [- x^2/2 [- x^3/3]],  x in (0,1)
  r_mfrac_series,   // 1/(1-x) >= 1,                   x in (0,1)
  logp_lbound,      // log(1+x) >= x - x^2/2,          x > -1
  logm_lbound,      // log(1-x) >= -x - x^2/2 - x^3/2, x in [0, 0.44]
  logp_lbound2,     // log(1+x) >= x - x^2/2 + x^3/5,  x in [0, 0.92]
};

inline constexpr std::array<Lemma, 10> all_lemmas = {
    Lemma::shannon_bounds, Lemma::logmono_ubound, Lemma::logmm_lbound, Lemma::logp_ubound,
    Lemma::r_pfrac_series, Lemma::logm_ubound,    Lemma::r_mfrac_series, Lemma::logp_lbound,
    Lemma::logm_lbound,    Lemma::logp_lbound2};

inline std::string_view to_string(Lemma l) {
  switch (l) {
    case Lemma::shannon_bounds: return "shannon_bounds";
    case Lemma::logmono_ubound: return "logmono_ubound";
    case Lemma::logmm_lbound: return "logmm_lbound";
    case Lemma::logp_ubound: return "logp_ubound";
    case Lemma::r_pfrac_series: return "r_pfrac_series";
    case Lemma::logm_ubound: return "logm_ubound";
    case Lemma::r_mfrac_series: return "r_mfrac_series";
    case Lemma::logp_lbound: return "logp_lbound";
    case Lemma::logm_lbound: return "logm_lbound";
    case Lemma::logp_lbound2: return "logp_lbound2";
  }
  return "?";
}

struct Interval {
  double lo;
  double hi;
  bool lo_closed;
  bool hi_closed;

  bool contains(double x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
  }
};

/// The domain each inequality is asserted on, as stated alongside it. A
/// union of intervals; unbounded sides use +-infinity.
inline std::vector<Interval> lemma_domain(Lemma l) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (l) {
    case Lemma::shannon_bounds:
    case Lemma::logmono_ubound:
    case Lemma::r_pfrac_series:
    case Lemma::logm_ubound:
    case Lemma::r_mfrac_series: return {{0.0, 1.0, false, false}};
    case Lemma::logmm_lbound: return {{-inf, 0.0, false, false}, {0.0, 1.0, false, false}};
    case Lemma::logp_ubound:
    case Lemma::logp_lbound: return {{-1.0, inf, false, false}};
    case Lemma::logm_lbound: return {{0.0, 0.44, true, true}};
    case Lemma::logp_lbound2: return {{0.0, 0.92, true, true}};
  }
  return {};
}

inline bool in_lemma_domain(Lemma l, double x) {
  for (const auto& iv : lemma_domain(l))
    if (iv.contains(x)) return true;
  return false;
}

/// log1p(x) minus its Taylor polynomial of degree m:
///   R_m(x) = log(1+x) - sum_{j=1..m} (-1)^{j+1} x^j / j.
/// Summed as the tail series for |x| <= 1/2 so that O(x^{m+1}) remainders
/// are resolved to full relative precision near the origin.
inline double log1p_remainder(double x, int m) {
  if (!(x > -1.0)) throw domain_error("log1p_remainder: x must exceed -1");
  if (std::abs(x) <= 0.5) {
    double term = 1.0;
    for (int j = 1; j <= m; ++j) term *= x;
    double sum = 0.0;
    for (int j = m + 1; j < 400; ++j) {
      term *= x;
      const double add = (j % 2 == 1 ? term : -term) / j;
      sum += add;
      if (std::abs(add) <= std::abs(sum) * 1e-18 || add == 0.0) break;
    }
    return sum;
  }
  double poly = 0.0;
  double pw = 1.0;
  for (int j = 1; j <= m; ++j) {
    pw *= x;
    poly += (j % 2 == 1 ? pw : -pw) / j;
  }
  return std::log1p(x) - poly;
}

struct LemmaCheck {
  Lemma lemma;
  std::string inequality;
  double x;
  double slack;
  bool passed;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
};

namespace detail {

struct Slack {
  const char* inequality;
  double value;
};

// Signed slacks for every inequality of a lemma at x (x assumed in-domain).
inline std::vector<Slack> lemma_slacks(Lemma l, double x) {
  switch (l) {
    case Lemma::shannon_bounds: {
      // Both sides share the -x log x term, which cancels exactly.
      const double r1 = log1p_remainder(-x, 1);  // log(1-x) + x
      return {{"H(x) < -x log x + x", x * x + (1.0 - x) * r1},
              {"H(x) > -x log x + x - x^2", -(1.0 - x) * r1}};
    }
    case Lemma::logmono_ubound:
      return {{"-(1-x) log(1-x) < x", x * x + (1.0 - x) * log1p_remainder(-x, 1)}};
    case Lemma::logmm_lbound:
      return {{"-log(1-x) > x", -log1p_remainder(-x, 1)}};
    case Lemma::logp_ubound:
      return {{"log(1+x) <= x", -log1p_remainder(x, 1)},
              {"log(1+x) <= x - x^2/2 + x^3/3", -log1p_remainder(x, 3)}};
    case Lemma::r_pfrac_series:
      return {{"1/(1+x) < 1", 1.0 - 1.0 / (1.0 + x)}};
    case Lemma::logm_ubound:
      return {{"log(1-x) <= -x", -log1p_remainder(-x, 1)},
              {"log(1-x) <= -x - x^2/2", -log1p_remainder(-x, 2)},
              {"log(1-x) <= -x - x^2/2 - x^3/3", -log1p_remainder(-x, 3)}};
    case Lemma::r_mfrac_series:
      return {{"1/(1-x) >= 1", 1.0 / (1.0 - x) - 1.0}};
    case Lemma::logp_lbound:
      return {{"log(1+x) >= x - x^2/2", log1p_remainder(x, 2)}};
    case Lemma::logm_lbound:
      return {{"log(1-x) >= -x - x^2/2 - x^3/2", log1p_remainder(-x, 3) + x * x * x / 6.0}};
    case Lemma::logp_lbound2:
      return {{"log(1+x) >= x - x^2/2 + x^3/5", log1p_remainder(x, 3) + 2.0 * x * x * x / 15.0}};
  }
  return {};
}

// Strict inequalities that degenerate to equality at a finite sample are not
// distinguishable from rounding; the pass criterion is slack >= 0.
inline bool slack_ok(double s) { return s >= 0.0; }

}  // namespace detail

/// Checks one lemma at every sample. Samples outside the lemma's stated
/// domain are rejected with a domain_error.
inline LemmaReport verify_lemma(Lemma l, std::span<const double> samples) {
  LemmaReport report;
  for (double x : samples) {
    if (!in_lemma_domain(l, x))
      throw domain_error("verify_lemma: sample " + std::to_string(x) + " outside the domain of " +
                         std::string(to_string(l)));
  }
  for (double x : samples)
    for (const auto& s : detail::lemma_slacks(l, x))
      report.checks.push_back({l, s.inequality, x, s.value, detail::slack_ok(s.value)});
  return report;
}

/// Checks every lemma at every sample.
inline LemmaReport verify_lemma_inequalities(std::span<const double> samples) {
  LemmaReport report;
  for (Lemma l : all_lemmas) {
    auto part = verify_lemma(l, samples);
    report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
  }
  return report;
}

/// Log-spaced samples across a lemma's stated domain: magnitudes from 1e-12
/// up to each interval's edge (or 1e6 when unbounded). Closed edges are
/// sampled exactly; open edges are approached to within one ulp. When the
/// domain has a negative part the samples are split evenly.
inline std::vector<double> lemma_samples(Lemma l, std::size_t count) {
  constexpr double min_mag = 1e-12;
  constexpr double max_mag = 1e6;
  const auto domain = lemma_domain(l);
  std::vector<double> out;
  out.reserve(count);

  std::vector<std::pair<int, double>> sides;  // (sign, edge magnitude)
  std::vector<bool> edge_closed;
  for (const auto& iv : domain) {
    if (iv.hi > 0.0) {
      sides.push_back({+1, std::isinf(iv.hi) ? max_mag : iv.hi});
      edge_closed.push_back(iv.hi_closed && !std::isinf(iv.hi));
    }
    if (iv.lo < 0.0) {
      sides.push_back({-1, std::isinf(iv.lo) ? max_mag : -iv.lo});
      edge_closed.push_back(iv.lo_closed && !std::isinf(iv.lo));
    }
  }
  for (std::size_t s = 0; s < sides.size(); ++s) {
    const std::size_t m = count / sides.size() + (s < count % sides.size() ? 1 : 0);
    const auto [sign, edge] = sides[s];
    const double top = edge_closed[s] ? edge : std::nextafter(edge, 0.0);
    const double a = std::log10(min_mag);
    const double b = std::log10(top);
    for (std::size_t i = 0; i < m; ++i) {
      double mag = m == 1 ? top : std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(m - 1));
      if (i + 1 == m) mag = top;
      out.push_back(sign * mag);
    }
  }
  return out;
}

/// Smallest slack over all inequalities of a lemma at x.
inline double lemma_min_slack(Lemma l, double x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : detail::lemma_slacks(l, x)) best = std::min(best, s.value);
  return best;
}

/// Bisects for the point between a passing sample `good` and a failing sample
/// `bad` where the lemma's minimum slack changes sign.
inline double lemma_violation_edge(Lemma l, double good, double bad) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (good + bad);
    if (mid == good || mid == bad) break;
    (detail::slack_ok(lemma_min_slack(l, mid)) ? good : bad) = mid;
  }
  return good;
}

}  // namespace ricbounds

#endif  // RICBOUNDS_LEMMAS_HPP
