#ifndef RICBOUNDS_TOOLS_CLI_HPP
#define RICBOUNDS_TOOLS_CLI_HPP

// ric_bounds command-line front end.
// Exit codes: 0 ok, 1 domain error, 2 solver failure or infeasible problem,
// 3 verification failure, 64 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ricbounds.hpp"

namespace ricbounds::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_solver = 2;
inline constexpr int exit_verify = 3;
inline constexpr int exit_usage = 64;

namespace detail {

inline void print_pair(std::ostream& out, const RicPair& p) {
  out << "lower " << format_g17(p.lower) << '\n' << "upper " << format_g17(p.upper) << '\n';
}

inline void print_warnings(std::ostream& err, const RicPair& p) {
  for (const auto& w : p.warnings) err << "warning: " << w << '\n';
}

struct Options {
  // bounds / asymptotic
  double delta = 0.0;
  double rho = 0.0;
  double tol = SolverConfig{}.tolerance;
  std::string regime;
  RegimeConstants k{};
  std::string reading = "corollary_consistent";
  // compare
  std::string spec_file;
  std::string format = "csv";
  std::string out_path;
  double fixed = 0.25;
  int start = -10;
  int end = -1;
  int points = 30;
  unsigned threads = 0;
  // sampling
  std::int64_t sk = 2;
  std::int64_t sN = 1000;
  double threshold = 0.0;
  double resolution = 1e-6;
  std::optional<double> path_delta;
  // empirical
  std::uint32_t en = 20;
  std::uint32_t eN = 40;
  std::uint32_t ek = 2;
  std::uint64_t seed = 1;
  std::string mode = "exhaustive";
  std::uint64_t budget = 10000;
  std::string dump_path;
  std::string load_path;
  // verify
  std::size_t samples = 1000;
};

inline LowerReading parse_reading(const std::string& s) {
  if (s == "literal") return LowerReading::literal;
  if (s == "corollary_consistent") return LowerReading::corollary_consistent;
  throw domain_error("--reading must be literal or corollary_consistent");
}

inline int run_bounds(const Options& o, std::ostream& out) {
  SolverConfig cfg;
  cfg.tolerance = o.tol;
  print_pair(out, ric_bounds(GridPoint(o.delta, o.rho), cfg));
  return exit_ok;
}

inline int run_asymptotic(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  RicPair p;
  if (o.regime == "small_rho") {
    p = bounds_small_rho(GridPoint(o.delta, o.rho), o.k.c);
  } else if (o.regime == "small_delta") {
    p = bounds_small_delta(GridPoint(o.delta, o.rho), o.k.c);
  } else if (o.regime == "gamma_path") {
    if (sub.count("--rho")) err << "note: gamma_path derives rho from delta and gamma; --rho ignored\n";
    p = bounds_gamma_path(o.delta, o.k.gamma, o.k.c_u, o.k.c_l, parse_reading(o.reading));
  } else if (o.regime == "gamma_limit") {
    p = gamma_limit_bounds(o.k.gamma, o.k.c_u, o.k.c_l);
  } else {
    throw domain_error("--regime must be small_rho, small_delta, gamma_path or gamma_limit");
  }
  print_pair(out, p);
  print_warnings(err, p);
  return exit_ok;
}

inline int run_compare(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  if (!o.spec_file.empty()) {
    std::ifstream in(o.spec_file);
    if (!in) throw domain_error("cannot open spec file '" + o.spec_file + "'");
    spec = parse_sweep_spec(in);
  }
  // Flags given explicitly override the file.
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--regime")) spec.regime = parse_regime(o.regime);
  if (given("--fixed")) spec.fixed = o.fixed;
  if (given("--start")) spec.start_exp = o.start;
  if (given("--end")) spec.end_exp = o.end;
  if (given("--points")) spec.points = o.points;
  if (given("--c")) spec.constants.c = o.k.c;
  if (given("--cu")) spec.constants.c_u = o.k.c_u;
  if (given("--cl")) spec.constants.c_l = o.k.c_l;
  if (given("--gamma")) spec.constants.gamma = o.k.gamma;
  if (given("--reading")) spec.reading = parse_reading(o.reading);
  if (given("--tol")) spec.solver.tolerance = o.tol;
  spec.validate();

  const auto rows = compare_sweep(spec, o.threads);
  for (const auto& r : rows)
    if (r.error) err << "row delta=" << format_g17(r.delta) << " rho=" << format_g17(r.rho) << ": " << *r.error << '\n';
  std::ofstream file;
  std::ostream* dst = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary);
    if (!file) throw domain_error("cannot open output file '" + o.out_path + "'");
    dst = &file;
  }
  if (o.format == "csv") write_csv(*dst, rows);
  else write_json(*dst, spec, rows);
  dst->flush();
  return exit_ok;
}

inline int run_omp(const Options& o, std::ostream& out) {
  out << omp_min_measurements(o.sk, o.sN) << '\n';
  return exit_ok;
}

inline int run_min_gamma(const Options& o, std::ostream& out) {
  MinGammaOptions opt;
  opt.path_delta = o.path_delta;
  const double g = min_gamma(max_ric_below(o.threshold), o.k.c_u, o.k.c_l, o.resolution, opt);
  const RicPair p = min_gamma_bounds(g, o.k.c_u, o.k.c_l, opt);
  out << "gamma " << format_g17(g) << '\n';
  print_pair(out, p);
  return exit_ok;
}

inline int run_empirical(const Options& o, std::ostream& out, std::ostream& err) {
  const EnumerationMode mode = o.mode == "exhaustive" ? EnumerationMode::exhaustive : EnumerationMode::monte_carlo;
  std::optional<MatrixSample> a;
  if (!o.load_path.empty()) {
    std::ifstream in(o.load_path, std::ios::binary);
    if (!in) throw domain_error("cannot open matrix file '" + o.load_path + "'");
    a = read_ricm(in, o.seed);
  } else {
    a = sample_gaussian(o.en, o.eN, o.seed);
  }
  if (!o.dump_path.empty()) {
    std::ofstream f(o.dump_path, std::ios::binary);
    if (!f) throw domain_error("cannot open dump file '" + o.dump_path + "'");
    write_ricm(f, *a);
  }
  EmpiricalOptions eo;
  eo.threads = o.threads;
  const auto est = empirical_ric(*a, o.ek, mode, o.budget, o.seed, eo);
  for (const auto& w : est.warnings) err << "warning: " << w << '\n';
  out << "n " << a->rows() << "  N " << a->cols() << "  k " << o.ek << "  seed " << o.seed << "  mode "
      << to_string(est.mode) << "  supports " << est.subsets_evaluated << '\n';
  out << "lower_hat " << format_g17(est.lower_hat) << '\n' << "upper_hat " << format_g17(est.upper_hat) << '\n';
  const RicPair bounds = ric_bounds(to_grid_point(est.size));
  out << validation_report(est, bounds).to_text();
  return exit_ok;
}

inline int run_verify(const Options& o, std::ostream& out) {
  bool ok = true;
  for (Lemma l : all_lemmas) {
    const auto xs = lemma_samples(l, o.samples);
    const auto rep = verify_lemma(l, xs);
    const auto fails = rep.failures();
    double worst = std::numeric_limits<double>::infinity();
    double worst_x = 0.0;
    for (const auto& c : rep.checks)
      if (c.slack < worst) worst = c.slack, worst_x = c.x;
    out << (fails == 0 ? "PASS" : "FAIL") << "  lemma " << to_string(l) << "  samples " << xs.size()
        << "  failures " << fails << "  min_slack " << format_g17(worst) << " at x=" << format_g17(worst_x)
        << '\n';
    ok = ok && fails == 0;
  }
  for (const auto& s : regime_sign_checks()) {
    out << (s.passed ? "PASS" : "FAIL") << "  sign " << s.name << "  delta " << format_g17(s.delta) << "  rho "
        << format_g17(s.rho) << "  value " << format_g17(s.value) << '\n';
    ok = ok && s.passed;
  }
  out << (ok ? "verify: all checks passed" : "verify: FAILURES present") << '\n';
  return ok ? exit_ok : exit_verify;
}

}  // namespace detail

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  detail::Options o;
  CLI::App app{"Restricted isometry constant bounds for Gaussian matrices", "ric_bounds"};
  app.require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "Implicit lower/upper RIC bounds at (delta, rho)");
  bounds->add_option("--delta", o.delta, "n/N in (0,1)")->required();
  bounds->add_option("--rho", o.rho, "k/n in (0,1)")->required();
  bounds->add_option("--tol", o.tol, "Residual tolerance on Psi");

  auto* asym = app.add_subcommand("asymptotic", "Closed-form bound formulas");
  asym->add_option("--regime", o.regime, "small_rho | small_delta | gamma_path | gamma_limit")->required();
  asym->add_option("--delta", o.delta, "n/N");
  asym->add_option("--rho", o.rho, "k/n");
  asym->add_option("--c", o.k.c, "Constant c (small_rho, small_delta)");
  asym->add_option("--cu", o.k.c_u, "Upper constant c_u (gamma regimes)");
  asym->add_option("--cl", o.k.c_l, "Lower constant c_l (gamma regimes)");
  asym->add_option("--gamma", o.k.gamma, "Path parameter gamma");
  asym->add_option("--reading", o.reading, "gamma_path lower: corollary_consistent | literal");

  auto* cmp = app.add_subcommand("compare", "Implicit versus formula sweep (CSV or JSON)");
  cmp->add_option("--spec", o.spec_file, "key=value sweep-spec file")->check(CLI::ExistingFile);
  cmp->add_option("--regime", o.regime, "small_rho | small_delta | gamma_path");
  cmp->add_option("--fixed", o.fixed, "Fixed coordinate (delta for small_rho, rho for small_delta)");
  cmp->add_option("--start", o.start, "First exponent of the swept grid");
  cmp->add_option("--end", o.end, "Last exponent of the swept grid");
  cmp->add_option("--points", o.points, "Grid points");
  cmp->add_option("--c", o.k.c, "Constant c");
  cmp->add_option("--cu", o.k.c_u, "Constant c_u");
  cmp->add_option("--cl", o.k.c_l, "Constant c_l");
  cmp->add_option("--gamma", o.k.gamma, "Path parameter gamma");
  cmp->add_option("--reading", o.reading, "gamma_path lower: corollary_consistent | literal");
  cmp->add_option("--tol", o.tol, "Residual tolerance on Psi");
  cmp->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmp->add_option("--out", o.out_path, "Output path (default stdout)");
  cmp->add_option("--threads", o.threads, "Worker threads (default RIC_BOUNDS_THREADS or all cores)");

  auto* samp = app.add_subcommand("sampling", "Sampling-theorem solvers");
  samp->require_subcommand(1);
  auto* omp = samp->add_subcommand("omp", "Minimal measurements n for OMP at sparsity k, dimension N");
  omp->add_option("--k", o.sk, "Sparsity (>= 2)")->required();
  omp->add_option("--N", o.sN, "Ambient dimension")->required();
  auto* mg = samp->add_subcommand("min-gamma", "Smallest gamma with max(L,U) < threshold");
  mg->add_option("--threshold", o.threshold, "RIC threshold")->required();
  mg->add_option("--cu", o.k.c_u, "Constant c_u");
  mg->add_option("--cl", o.k.c_l, "Constant c_l");
  mg->add_option("--resolution", o.resolution, "Absolute resolution of gamma");
  mg->add_option("--path-delta", o.path_delta, "Use the gamma path at this delta instead of the limit");

  auto* emp = app.add_subcommand("empirical", "Empirical RICs of a sampled Gaussian matrix");
  emp->add_option("--n", o.en, "Rows");
  emp->add_option("--N", o.eN, "Columns");
  emp->add_option("--k", o.ek, "Sparsity")->required();
  emp->add_option("--seed", o.seed, "64-bit seed");
  emp->add_option("--mode", o.mode, "exhaustive | monte_carlo")->check(CLI::IsMember({"exhaustive", "monte_carlo"}));
  emp->add_option("--budget", o.budget, "Supports drawn in monte_carlo mode");
  emp->add_option("--threads", o.threads, "Worker threads");
  emp->add_option("--dump", o.dump_path, "Write the matrix in RICM format");
  emp->add_option("--load", o.load_path, "Read the matrix from a RICM file instead of sampling");

  auto* ver = app.add_subcommand("verify", "Run the inequality-lemma and exponent sign suites");
  ver->add_option("--samples", o.samples, "Samples per lemma domain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    if (*bounds) return detail::run_bounds(o, out);
    if (*asym) return detail::run_asymptotic(o, *asym, out, err);
    if (*cmp) return detail::run_compare(o, *cmp, out, err);
    if (*omp) return detail::run_omp(o, out);
    if (*mg) return detail::run_min_gamma(o, out);
    if (*emp) return detail::run_empirical(o, out, err);
    if (*ver) return detail::run_verify(o, out);
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_domain;
  } catch (const solver_error& e) {
    err << "solver failure: " << e.what() << " (last bracket [" << format_g17(e.bracket_lo()) << ", "
        << format_g17(e.bracket_hi()) << "])\n";
    return exit_solver;
  } catch (const infeasible_error& e) {
    err << "infeasible: " << e.what() << '\n';
    return exit_solver;
  }
  return exit_usage;
}

}  // namespace ricbounds::cli

#endif  // RICBOUNDS_TOOLS_CLI_HPP
