#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "ricbounds/reports.hpp"

using namespace ricbounds;

namespace {

SweepSpec figure1(int start, int end, int points) {
  SweepSpec s;
  s.regime = Regime::small_rho;
  s.fixed = 0.25;
  s.constants.c = 6.0;
  s.start_exp = start;
  s.end_exp = end;
  s.points = points;
  return s;
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0 || (std::isnan(a) && std::isnan(b)); }

std::string csv_of(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

}  // namespace

TEST(SweepSpec, GridEndpointsAndOrder) {
  const auto xs = figure1(-10, -1, 30).swept_values();
  ASSERT_EQ(xs.size(), 30u);
  EXPECT_DOUBLE_EQ(xs.front(), 1e-10);
  EXPECT_DOUBLE_EQ(xs.back(), 1e-1);
  EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end()));
  const auto rev = figure1(-1, -10, 30).swept_values();
  EXPECT_EQ(rev, xs);
}

TEST(SweepSpec, Validation) {
  auto s = figure1(-10, -1, 0);
  EXPECT_THROW(s.validate(), domain_error);
  s = figure1(-10, -1, 1);
  EXPECT_THROW(s.validate(), domain_error);
  s = figure1(-10, 1, 5);
  EXPECT_THROW(s.validate(), domain_error);
  s = figure1(-10, -1, 5);
  s.fixed = 1.0;
  EXPECT_THROW(s.validate(), domain_error);
}

TEST(CompareSweep, FigureOneRowsAndCoarseTrend) {
  const auto rows = compare_sweep(figure1(-10, -1, 30));
  ASSERT_EQ(rows.size(), 30u);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.error.has_value());
    EXPECT_GE(r.reldiff_lower, 0.0);
    EXPECT_GE(r.reldiff_upper, 0.0);
    EXPECT_TRUE(std::isfinite(r.reldiff_upper));
  }
  const auto coarse = compare_sweep(figure1(-10, -2, 3));
  ASSERT_EQ(coarse.size(), 3u);
  EXPECT_DOUBLE_EQ(coarse[1].rho, 1e-6);
  EXPECT_LT(coarse[0].reldiff_upper, coarse[1].reldiff_upper);
  EXPECT_LT(coarse[1].reldiff_upper, coarse[2].reldiff_upper);
  EXPECT_LT(coarse[0].reldiff_lower, coarse[1].reldiff_lower);
  EXPECT_LT(coarse[1].reldiff_lower, coarse[2].reldiff_lower);
}

TEST(CompareSweep, FigureFourLowerColumnsInUnitInterval) {
  SweepSpec s;
  s.regime = Regime::gamma_path;
  s.constants.gamma = 300;
  s.constants.c_u = s.constants.c_l = 1.0 / 3;
  s.start_exp = -80;
  s.end_exp = -1;
  s.points = 40;
  for (const auto& r : compare_sweep(s)) {
    ASSERT_FALSE(r.error.has_value()) << *r.error;
    EXPECT_GT(r.formula_lower, 0.0);
    EXPECT_LT(r.formula_lower, 1.0);
    EXPECT_GT(r.implicit_lower, 0.0);
    EXPECT_LT(r.implicit_lower, 1.0);
    EXPECT_DOUBLE_EQ(r.rho, rho_gamma(r.delta, 300));
  }
}

TEST(CompareSweep, SinglePointMatchesDirectCall) {
  auto s = figure1(-3, -3, 1);
  const auto rows = compare_sweep(s);
  ASSERT_EQ(rows.size(), 1u);
  const auto p = ric_bounds(GridPoint(0.25, 1e-3));
  EXPECT_EQ(rows[0].implicit_lower, p.lower);
  EXPECT_EQ(rows[0].implicit_upper, p.upper);
}

TEST(CompareSweep, RowErrorsDoNotAbortSweep) {
  SweepSpec s;
  s.regime = Regime::small_delta;
  s.fixed = 0.9;
  s.constants.c = 1.0;
  s.start_exp = -2;
  s.end_exp = 0;
  s.points = 3;  // the last point, delta = 1, is not admissible
  const auto rows = compare_sweep(s);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_FALSE(rows[0].error.has_value());
  EXPECT_TRUE(rows[2].error.has_value());
  EXPECT_TRUE(std::isnan(rows[2].implicit_upper));
  const auto csv = csv_of(rows);
  EXPECT_NE(csv.find("nan"), std::string::npos);
}

TEST(Csv, HeaderIsExact) {
  const auto csv = csv_of({});
  EXPECT_EQ(csv, "delta,rho,implicit_lower,implicit_upper,formula_lower,formula_upper,reldiff_lower,reldiff_upper\n");
}

TEST(Csv, SeventeenDigitFormatting) {
  EXPECT_EQ(format_g17(0.1), "0.10000000000000001");
  EXPECT_EQ(format_g17(1e-80), "9.9999999999999996e-81");
  EXPECT_EQ(format_g17(0.25), "0.25");
}

TEST(Csv, RoundTripIsExact) {
  const auto rows = compare_sweep(figure1(-10, -1, 30));
  std::stringstream ss(csv_of(rows));
  const auto back = read_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_TRUE(bit_equal(back[i].delta, rows[i].delta));
    EXPECT_TRUE(bit_equal(back[i].rho, rows[i].rho));
    EXPECT_TRUE(bit_equal(back[i].implicit_lower, rows[i].implicit_lower));
    EXPECT_TRUE(bit_equal(back[i].implicit_upper, rows[i].implicit_upper));
    EXPECT_TRUE(bit_equal(back[i].formula_lower, rows[i].formula_lower));
    EXPECT_TRUE(bit_equal(back[i].formula_upper, rows[i].formula_upper));
    EXPECT_TRUE(bit_equal(back[i].reldiff_lower, rows[i].reldiff_lower));
    EXPECT_TRUE(bit_equal(back[i].reldiff_upper, rows[i].reldiff_upper));
  }
}

TEST(Csv, RejectsMalformedInput) {
  std::stringstream bad_header("delta,rho\n");
  EXPECT_THROW(read_csv(bad_header), domain_error);
  std::stringstream short_row(std::string(csv_header) + "\n1,2,3\n");
  EXPECT_THROW(read_csv(short_row), domain_error);
}

TEST(CompareSweep, DeterministicAcrossRunsAndThreads) {
  const auto s = figure1(-10, -1, 30);
  const auto a = csv_of(compare_sweep(s, 1));
  const auto b = csv_of(compare_sweep(s, 1));
  const auto c = csv_of(compare_sweep(s, 4));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Json, MirrorsFieldNamesAndCarriesErrors) {
  SweepSpec s;
  s.regime = Regime::small_delta;
  s.fixed = 0.9;
  s.constants.c = 1.0;
  s.start_exp = -2;
  s.end_exp = 0;
  s.points = 3;
  const auto rows = compare_sweep(s);
  std::ostringstream os;
  write_json(os, s, rows);
  const auto j = nlohmann::json::parse(os.str());
  ASSERT_EQ(j["rows"].size(), 3u);
  for (const char* k : {"delta", "rho", "implicit_lower", "implicit_upper", "formula_lower", "formula_upper",
                        "reldiff_lower", "reldiff_upper"})
    EXPECT_TRUE(j["rows"][0].contains(k)) << k;
  EXPECT_TRUE(j["rows"][2].contains("error"));
  EXPECT_TRUE(j["rows"][2]["implicit_upper"].is_null());
  EXPECT_EQ(j["spec"]["regime"], "small_delta");
  EXPECT_EQ(j["rows"][0]["implicit_upper"].get<double>(), rows[0].implicit_upper);
}

TEST(SpecFile, ParsesKeyValueLines) {
  std::stringstream in(
      "# figure 2\n"
      "regime = small_delta\n"
      "fixed=0.5\n"
      "\n"
      "start=-50\n"
      "end = -10\n"
      "points=5\n"
      "c=1\n"
      "tol=1e-11\n");
  const auto s = parse_sweep_spec(in);
  EXPECT_EQ(s.regime, Regime::small_delta);
  EXPECT_EQ(s.fixed, 0.5);
  EXPECT_EQ(s.start_exp, -50);
  EXPECT_EQ(s.end_exp, -10);
  EXPECT_EQ(s.points, 5);
  EXPECT_EQ(s.constants.c, 1.0);
  EXPECT_EQ(s.solver.tolerance, 1e-11);
}

TEST(SpecFile, RejectsUnknownKeysAndBadLines) {
  std::stringstream unknown("colour=red\n");
  EXPECT_THROW(parse_sweep_spec(unknown), domain_error);
  std::stringstream no_eq("regime small_rho\n");
  EXPECT_THROW(parse_sweep_spec(no_eq), domain_error);
  std::stringstream frac("points=2.5\n");
  EXPECT_THROW(parse_sweep_spec(frac), domain_error);
  std::stringstream reading("reading=sideways\n");
  EXPECT_THROW(parse_sweep_spec(reading), domain_error);
}

TEST(Threads, EnvironmentVariableCapsWorkers) {
  ::setenv("RIC_BOUNDS_THREADS", "3", 1);
  EXPECT_EQ(default_thread_count(), 3u);
  ::setenv("RIC_BOUNDS_THREADS", "garbage", 1);
  EXPECT_GE(default_thread_count(), 1u);
  ::unsetenv("RIC_BOUNDS_THREADS");
}
