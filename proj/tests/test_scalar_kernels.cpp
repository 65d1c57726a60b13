#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "mp_oracle.hpp"
#include "ricbounds/grid_point.hpp"
#include "ricbounds/scalar_kernels.hpp"

using namespace ricbounds;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(GridPoint, AcceptsInteriorAndRejectsBoundary) {
  EXPECT_NO_THROW(GridPoint(0.25, 0.1));
  EXPECT_THROW(GridPoint(0.0, 0.1), domain_error);
  EXPECT_THROW(GridPoint(1.0, 0.1), domain_error);
  EXPECT_THROW(GridPoint(0.5, 1.0), domain_error);
  EXPECT_THROW(GridPoint(0.5, -0.1), domain_error);
  EXPECT_THROW(GridPoint(std::nan(""), 0.1), domain_error);
}

TEST(GridPoint, LogTermIsComputedFromLogs) {
  const GridPoint pt(1e-80, 1e-5);
  EXPECT_NEAR(pt.log_inv_d2r3(), 2 * 80 * std::log(10.0) + 3 * 5 * std::log(10.0), 1e-10);
}

TEST(ShannonEntropy, SymmetricMaximumAtHalf) { EXPECT_NEAR(shannon_entropy(0.5), std::log(2.0), 1e-15); }

// 0.3 and 0.7 are not exact complements in binary; they differ by 1 ulp.
TEST(ShannonEntropy, SymmetricInP) { EXPECT_NEAR(shannon_entropy(0.3), shannon_entropy(0.7), 4e-16); }

TEST(ShannonEntropy, MatchesOracleAtTenth) {
  EXPECT_NEAR(shannon_entropy(0.1), 0.32508297339144823951, 1e-16);
}

TEST(ShannonEntropy, RejectsClosedEndpoints) {
  EXPECT_THROW(shannon_entropy(0.0), domain_error);
  EXPECT_THROW(shannon_entropy(1.0), domain_error);
  EXPECT_THROW(shannon_entropy(-0.5), domain_error);
  EXPECT_THROW(shannon_entropy(std::nan("")), domain_error);
}

TEST(ShannonEntropy, SymmetryOnRandomSamples) {
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    double p = u(gen);
    if (p == 0.0) continue;
    // 1 - (1 - p) may differ from p by rounding; compare H at a pair that is
    // exactly symmetric in floating point.
    const double q = 1.0 - p;
    p = 1.0 - q;
    const double a = shannon_entropy(p);
    const double b = shannon_entropy(q);
    EXPECT_LE(std::abs(a - b), 4 * std::numeric_limits<double>::epsilon() * a) << "p=" << p;
  }
}

TEST(ShannonEntropy, AccurateNearZeroAgainstOracle) {
  for (double p : {1e-300, 1e-100, 1e-50, 1e-20, 1e-12, 1e-8, 1e-4}) {
    const double want = oracle::to_double(oracle::H(oracle::mp(p)));
    EXPECT_LE(rel(shannon_entropy(p), want), 8 * std::numeric_limits<double>::epsilon()) << "p=" << p;
  }
}

TEST(PsiMin, AtOneMinusRhoIsHalfEntropy) {
  EXPECT_NEAR(psi_min(0.8, 0.2), 0.5 * shannon_entropy(0.2), 1e-15);
  EXPECT_NEAR(psi_min(0.8, 0.2), 0.25020121176909393977, 1e-15);
}

TEST(PsiMin, DivergesAtZero) {
  // 1e-900 is not a double; use the log-coordinate kernel. The value there is
  // H(0.5) + (0.5 log 1e-900 + 0.5 + 0.5 log 0.5) / 2 = -517.31.
  const double ln10 = std::log(10.0);
  EXPECT_NEAR(psi_min_log(-900 * ln10, 0.5), -517.3117, 1e-3);
  double prev = psi_min(1e-10, 0.5);
  for (int e = 20; e <= 3600; e *= 2) {
    const double v = psi_min_log(-e * ln10, 0.5);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(psi_min_log(-1800 * ln10, 0.5), -1e3);
  EXPECT_LT(psi_min(std::numeric_limits<double>::denorm_min(), 0.5), -100.0);
}

TEST(PsiMin, MatchesOracle) {
  const double want = oracle::to_double(oracle::psi_min(oracle::mp("0.5"), oracle::mp("0.1")));
  EXPECT_NEAR(want, 0.098037487489770566068, 1e-17);
  EXPECT_LE(rel(psi_min(0.5, 0.1), want), 1e-14);
}

TEST(PsiMin, LogFormAgreesWithDirectForm) {
  for (double l : {1e-200, 1e-10, 0.3, 0.9, 0.999999}) {
    EXPECT_NEAR(psi_min_log(std::log(l), 0.1), psi_min(l, 0.1), 1e-13 * (1 + std::abs(psi_min(l, 0.1))));
  }
}

TEST(PsiMin, RejectsNonPositiveLambda) {
  EXPECT_THROW(psi_min(0.0, 0.5), domain_error);
  EXPECT_THROW(psi_min(-1.0, 0.5), domain_error);
}

TEST(PsiMax, RhoNearOneAtUnitLambda) { EXPECT_NEAR(psi_max(1.0, 1.0 - 1e-12), 0.5, 1e-6); }

TEST(PsiMax, AtOnePlusRho) {
  EXPECT_NEAR(psi_max(1.25, 0.25), 0.31275151471136742471, 1e-15);
}

TEST(PsiMax, DivergesForLargeLambda) { EXPECT_LT(psi_max(1e4, 0.5), -1e3); }

TEST(PsiMax, RejectsNonPositiveLambda) { EXPECT_THROW(psi_max(0.0, 0.5), domain_error); }

TEST(BigPsi, MaxSidePositiveAtOnePlusRho) {
  const auto v = big_psi(Side::max, 1.1, GridPoint(0.25, 0.1));
  EXPECT_EQ(v.side, Side::max);
  EXPECT_GT(v.value, 0.0);
  EXPECT_NEAR(v.value, 0.63517725009220510158, 1e-14);
}

TEST(BigPsi, MinSideAtOneMinusRho) {
  const auto v = big_psi(Side::min, 0.9, GridPoint(0.25, 0.1));
  EXPECT_NEAR(v.value, 0.5 * shannon_entropy(0.1) + 4 * shannon_entropy(0.025), 1e-14);
  EXPECT_NEAR(v.value, 0.63016888324584826411, 1e-14);
}

TEST(BigPsi, MinSideNegativeAtTinyLambda) { EXPECT_LT(big_psi(Side::min, 1e-300, GridPoint(0.5, 0.5)).value, 0.0); }

TEST(BigPsi, TinyDeltaRhoMatchesFiftyDigitOracle) {
  struct Case {
    const char* d;
    const char* r;
  };
  for (const Case c : {Case{"1e-8", "0.5"}, Case{"1e-6", "1e-3"}, Case{"1e-40", "0.3"}, Case{"1e-50", "1e-5"},
                       Case{"1e-20", "1e-6"}}) {
    const oracle::mp d(c.d), r(c.r);
    const GridPoint pt(std::stod(c.d), std::stod(c.r));
    const double lmax = 1.0 + pt.rho() + 0.5;
    const double lmin = (1.0 - pt.rho()) / 2;
    const double want_max = oracle::to_double(oracle::big_psi_max(oracle::mp(lmax), d, r));
    const double want_min = oracle::to_double(oracle::big_psi_min(oracle::mp(lmin), d, r));
    const double got_max = big_psi(Side::max, lmax, pt).value;
    const double got_min = big_psi(Side::min, lmin, pt).value;
    ASSERT_TRUE(std::isfinite(got_max) && std::isfinite(got_min));
    EXPECT_LE(rel(got_max, want_max), 1e-12) << c.d << " " << c.r;
    EXPECT_LE(rel(got_min, want_min), 1e-12) << c.d << " " << c.r;
  }
}

TEST(PsiMax, StrictlyDecreasingAboveOnePlusRho) {
  for (double rho : {1e-4, 0.1, 0.3, 0.5}) {
    double prev = psi_max(1 + rho, rho);
    for (double l = 1 + rho + 0.01; l < 50; l *= 1.07) {
      const double cur = psi_max(l, rho);
      EXPECT_LT(cur, prev) << "rho=" << rho << " lambda=" << l;
      const double h = 1e-6 * l;
      const double fd = (psi_max(l + h, rho) - psi_max(l - h, rho)) / (2 * h);
      const double exact = 0.5 * ((1 + rho) / l - 1);
      EXPECT_EQ(std::signbit(fd), std::signbit(exact));
      EXPECT_NEAR(fd, exact, 1e-6 * std::abs(exact) + 1e-9);
      prev = cur;
    }
  }
}

TEST(PsiMin, StrictlyIncreasingBelowOneMinusRho) {
  for (double rho : {1e-4, 0.1, 0.3, 0.5, 0.9}) {
    double prev = -std::numeric_limits<double>::infinity();
    for (double l = 1e-6; l < 1 - rho - 1e-3; l *= 1.1) {
      const double cur = psi_min(l, rho);
      EXPECT_GT(cur, prev) << "rho=" << rho << " lambda=" << l;
      const double h = 1e-6 * l;
      const double fd = (psi_min(l + h, rho) - psi_min(l - h, rho)) / (2 * h);
      const double exact = 0.5 * ((1 - rho) / l - 1);
      EXPECT_GT(fd, 0.0);
      EXPECT_NEAR(fd, exact, 1e-6 * std::abs(exact) + 1e-9);
      prev = cur;
    }
  }
}
