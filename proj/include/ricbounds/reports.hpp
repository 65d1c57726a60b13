#ifndef RICBOUNDS_REPORTS_HPP
#define RICBOUNDS_REPORTS_HPP

// Implicit-versus-formula sweeps over log-spaced grids, with CSV and JSON
// serialization.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "ricbounds/asymptotic_bounds.hpp"
#include "ricbounds/errors.hpp"
#include "ricbounds/grid_point.hpp"
#include "ricbounds/implicit_bounds.hpp"
#include "ricbounds/parallel.hpp"

namespace ricbounds {

enum class Regime { small_rho, small_delta, gamma_path };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::small_rho: return "small_rho";
    case Regime::small_delta: return "small_delta";
    case Regime::gamma_path: return "gamma_path";
  }
  return "?";
}

inline Regime parse_regime(std::string_view s) {
  if (s == "small_rho") return Regime::small_rho;
  if (s == "small_delta") return Regime::small_delta;
  if (s == "gamma_path") return Regime::gamma_path;
  throw domain_error("unknown regime '" + std::string(s) + "' (expected small_rho, small_delta or gamma_path)");
}

/// small_rho sweeps rho at fixed delta; small_delta sweeps delta at fixed rho;
/// gamma_path sweeps delta with rho = rho_gamma(delta) and ignores `fixed`.
/// Swept values are 10^(lo + (hi - lo) * i / (points - 1)) for the sorted
/// exponent pair (lo, hi), so reversed endpoints give the same grid.
struct SweepSpec {
  Regime regime = Regime::small_rho;
  double fixed = 0.25;
  int start_exp = -10;
  int end_exp = -1;
  int points = 30;
  RegimeConstants constants{};
  LowerReading reading = LowerReading::corollary_consistent;
  SolverConfig solver{};

  void validate() const {
    if (points < 1) throw domain_error("SweepSpec: points must be >= 1");
    if (points == 1 && start_exp != end_exp) throw domain_error("SweepSpec: a single point needs start_exp == end_exp");
    if (start_exp > 0 || end_exp > 0) throw domain_error("SweepSpec: exponents must be <= 0");
    if (regime != Regime::gamma_path && !(fixed > 0.0 && fixed < 1.0))
      throw domain_error("SweepSpec: fixed coordinate must lie in (0,1)");
    solver.validate();
  }

  std::vector<double> swept_values() const;
};

inline std::vector<double> SweepSpec::swept_values() const {
  validate();
  const int lo = std::min(start_exp, end_exp);
  const int hi = std::max(start_exp, end_exp);
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double e = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    v[static_cast<std::size_t>(i)] = std::pow(10.0, e);
  }
  return v;
}

/// One grid point. When `error` is set the numeric fields past delta/rho
/// are NaN.
struct ReportRow {
  double delta = 0.0;
  double rho = 0.0;
  double implicit_lower = std::numeric_limits<double>::quiet_NaN();
  double implicit_upper = std::numeric_limits<double>::quiet_NaN();
  double formula_lower = std::numeric_limits<double>::quiet_NaN();
  double formula_upper = std::numeric_limits<double>::quiet_NaN();
  double reldiff_lower = std::numeric_limits<double>::quiet_NaN();
  double reldiff_upper = std::numeric_limits<double>::quiet_NaN();
  std::optional<std::string> error;
};

/// Implicit bounds, regime formula and relative differences at one point.
/// reldiff_lower compares in 1 - L coordinates when both gaps are known,
/// so saturated lower bounds keep their precision.
inline ReportRow compare_point(const SweepSpec& spec, double swept) {
  ReportRow row;
  const auto& k = spec.constants;
  try {
    switch (spec.regime) {
      case Regime::small_rho: row.delta = spec.fixed; row.rho = swept; break;
      case Regime::small_delta: row.delta = swept; row.rho = spec.fixed; break;
      case Regime::gamma_path: row.delta = swept; row.rho = rho_gamma(swept, k.gamma); break;
    }
    const GridPoint pt(row.delta, row.rho);
    const RicPair imp = ric_bounds(pt, spec.solver);
    RicPair form;
    switch (spec.regime) {
      case Regime::small_rho: form = bounds_small_rho(pt, k.c); break;
      case Regime::small_delta: form = bounds_small_delta(pt, k.c); break;
      case Regime::gamma_path: form = bounds_gamma_path(row.delta, k.gamma, k.c_u, k.c_l, spec.reading); break;
    }
    row.implicit_lower = imp.lower;
    row.implicit_upper = imp.upper;
    row.formula_lower = form.lower;
    row.formula_upper = form.upper;
    row.reldiff_lower = lower_abs_difference(imp, form) / imp.lower;
    row.reldiff_upper = std::abs(imp.upper - form.upper) / imp.upper;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

/// Rows in ascending order of the swept coordinate. Per-row failures are
/// recorded in ReportRow::error; the sweep continues.
inline std::vector<ReportRow> compare_sweep(const SweepSpec& spec, unsigned threads = 0) {
  const auto xs = spec.swept_values();
  std::vector<ReportRow> rows(xs.size());
  parallel_blocks(xs.size(), threads ? threads : default_thread_count(),
                  [&](std::size_t, std::size_t b, std::size_t e) {
                    for (std::size_t i = b; i < e; ++i) rows[i] = compare_point(spec, xs[i]);
                  });
  return rows;
}

// ---- CSV ------------------------------------------------------------------

inline constexpr std::string_view csv_header =
    "delta,rho,implicit_lower,implicit_upper,formula_lower,formula_upper,reldiff_lower,reldiff_upper";

/// Shortest form with 17 significant digits (printf "%.17g").
inline std::string format_g17(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw domain_error("cannot parse number '" + std::string(s) + "'");
  return v;
}

inline void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << csv_header << '\n';
  for (const auto& r : rows) {
    const double f[] = {r.delta, r.rho, r.implicit_lower, r.implicit_upper,
                        r.formula_lower, r.formula_upper, r.reldiff_lower, r.reldiff_upper};
    for (std::size_t i = 0; i < std::size(f); ++i) os << (i ? "," : "") << format_g17(f[i]);
    os << '\n';
  }
}

/// Inverse of write_csv. Error rows come back with NaN fields and no message.
inline std::vector<ReportRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != csv_header) throw domain_error("CSV: missing or wrong header");
  std::vector<ReportRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> f;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      f.push_back(parse_double(std::string_view(line).substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (f.size() != 8) throw domain_error("CSV: expected 8 fields, got " + std::to_string(f.size()));
    rows.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], std::nullopt});
  }
  return rows;
}

// ---- JSON -----------------------------------------------------------------

inline nlohmann::json to_json(const SweepSpec& s) {
  return {{"regime", to_string(s.regime)},
          {"fixed", s.fixed},
          {"start_exp", s.start_exp},
          {"end_exp", s.end_exp},
          {"points", s.points},
          {"c", s.constants.c},
          {"cu", s.constants.c_u},
          {"cl", s.constants.c_l},
          {"gamma", s.constants.gamma},
          {"reading", s.reading == LowerReading::literal ? "literal" : "corollary_consistent"},
          {"tol", s.solver.tolerance}};
}

/// Non-finite values become null.
inline nlohmann::json to_json(const ReportRow& r) {
  auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  nlohmann::json j = {{"delta", num(r.delta)},
                      {"rho", num(r.rho)},
                      {"implicit_lower", num(r.implicit_lower)},
                      {"implicit_upper", num(r.implicit_upper)},
                      {"formula_lower", num(r.formula_lower)},
                      {"formula_upper", num(r.formula_upper)},
                      {"reldiff_lower", num(r.reldiff_lower)},
                      {"reldiff_upper", num(r.reldiff_upper)}};
  if (r.error) j["error"] = *r.error;
  return j;
}

inline void write_json(std::ostream& os, const SweepSpec& spec, const std::vector<ReportRow>& rows) {
  nlohmann::json j = {{"spec", to_json(spec)}, {"rows", nlohmann::json::array()}};
  for (const auto& r : rows) j["rows"].push_back(to_json(r));
  os << j.dump(2) << '\n';
}

// ---- Sweep-spec files -----------------------------------------------------

/// Applies one key=value setting. Keys: regime, fixed, start, end, points,
/// c, cu, cl, gamma, reading (corollary_consistent|literal), tol.
inline void apply_spec_setting(SweepSpec& s, std::string_view key, std::string_view value) {
  auto as_int = [&] {
    const double v = parse_double(value);
    if (v != std::floor(v) || std::abs(v) > 1e6) throw domain_error("spec key '" + std::string(key) + "' needs an integer");
    return static_cast<int>(v);
  };
  if (key == "regime") s.regime = parse_regime(value);
  else if (key == "fixed") s.fixed = parse_double(value);
  else if (key == "start") s.start_exp = as_int();
  else if (key == "end") s.end_exp = as_int();
  else if (key == "points") s.points = as_int();
  else if (key == "c") s.constants.c = parse_double(value);
  else if (key == "cu") s.constants.c_u = parse_double(value);
  else if (key == "cl") s.constants.c_l = parse_double(value);
  else if (key == "gamma") s.constants.gamma = parse_double(value);
  else if (key == "tol") s.solver.tolerance = parse_double(value);
  else if (key == "reading") {
    if (value == "literal") s.reading = LowerReading::literal;
    else if (value == "corollary_consistent") s.reading = LowerReading::corollary_consistent;
    else throw domain_error("spec key 'reading' must be literal or corollary_consistent");
  } else {
    throw domain_error("unknown spec key '" + std::string(key) + "'");
  }
}

/// Flat key=value lines; blank lines and lines starting with '#' are skipped;
/// whitespace around keys and values is ignored.
inline SweepSpec parse_sweep_spec(std::istream& is, SweepSpec base = {}) {
  auto trim = [](std::string_view v) {
    const auto b = v.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return std::string_view{};
    return v.substr(b, v.find_last_not_of(" \t\r") - b + 1);
  };
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw domain_error("spec line " + std::to_string(lineno) + ": expected key=value");
    apply_spec_setting(base, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  base.validate();
  return base;
}

}  // namespace ricbounds

#endif  // RICBOUNDS_REPORTS_HPP
