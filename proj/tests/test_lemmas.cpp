#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "ricbounds/lemmas.hpp"
#include "ricbounds/scalar_kernels.hpp"

using namespace ricbounds;

TEST(Lemmas, ShannonSandwichAtTenth) {
  const double x = 0.1;
  const double h = shannon_entropy(x);
  EXPECT_LT(-x * std::log(x) + x - x * x, h);
  EXPECT_LT(h, -x * std::log(x) + x);
  const std::vector<double> xs{x};
  EXPECT_TRUE(verify_lemma(Lemma::shannon_bounds, xs).all_passed());
}

TEST(Lemmas, AllHoldAtTenth) {
  const std::vector<double> xs{0.1};
  const auto rep = verify_lemma_inequalities(xs);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_GE(rep.checks.size(), all_lemmas.size());
}

TEST(Lemmas, AllHoldNearOriginWithNonNegativeSlack) {
  const std::vector<double> xs{1e-8};
  for (const auto& c : verify_lemma_inequalities(xs).checks)
    EXPECT_GE(c.slack, 0.0) << to_string(c.lemma) << ": " << c.inequality;
}

// Stated to hold on the closed interval up to 0.44.
TEST(Lemmas, LogmLboundAtStatedDomainEdge) {
  const std::vector<double> xs{0.44};
  const auto rep = verify_lemma(Lemma::logm_lbound, xs);
  for (const auto& c : rep.checks) EXPECT_GE(c.slack, 0.0) << c.inequality << " slack " << c.slack;
}

TEST(Lemmas, LogmLboundValidEdgeIsBelowStatedEdge) {
  const double edge = lemma_violation_edge(Lemma::logm_lbound, 0.3, 0.44);
  EXPECT_NEAR(edge, 0.43177179, 1e-7);
}

TEST(Lemmas, LogpLbound2ValidEdge) {
  EXPECT_NEAR(lemma_violation_edge(Lemma::logp_lbound2, 0.5, 0.92), 0.91680138, 1e-7);
}

TEST(Lemmas, RejectsSamplesOutsideDomain) {
  const std::vector<double> above{0.45};
  EXPECT_THROW(verify_lemma(Lemma::logm_lbound, above), domain_error);
  const std::vector<double> zero{0.0};
  EXPECT_THROW(verify_lemma(Lemma::logmm_lbound, zero), domain_error);
  const std::vector<double> below{-1.0};
  EXPECT_THROW(verify_lemma(Lemma::logp_ubound, below), domain_error);
  const std::vector<double> one{1.0};
  EXPECT_THROW(verify_lemma_inequalities(one), domain_error);
}

TEST(Lemmas, DomainsMatchStatements) {
  EXPECT_TRUE(in_lemma_domain(Lemma::logm_lbound, 0.0));
  EXPECT_TRUE(in_lemma_domain(Lemma::logm_lbound, 0.44));
  EXPECT_TRUE(in_lemma_domain(Lemma::logp_lbound2, 0.92));
  EXPECT_FALSE(in_lemma_domain(Lemma::logp_lbound2, 0.93));
  EXPECT_TRUE(in_lemma_domain(Lemma::logp_ubound, -0.999));
  EXPECT_TRUE(in_lemma_domain(Lemma::logp_ubound, 1e5));
  EXPECT_TRUE(in_lemma_domain(Lemma::logmm_lbound, -5.0));
  EXPECT_FALSE(in_lemma_domain(Lemma::shannon_bounds, 1.0));
}

TEST(Lemmas, SamplesStayInsideDomainAndReachEdges) {
  for (Lemma l : all_lemmas) {
    const auto xs = lemma_samples(l, 1000);
    ASSERT_EQ(xs.size(), 1000u) << to_string(l);
    for (double x : xs) ASSERT_TRUE(in_lemma_domain(l, x)) << to_string(l) << " x=" << x;
  }
  const auto xs = lemma_samples(Lemma::logm_lbound, 1000);
  EXPECT_EQ(*std::max_element(xs.begin(), xs.end()), 0.44);
}

TEST(Lemmas, RemainderMatchesSeriesTail) {
  // R_2(x) = log(1+x) - x + x^2/2 = x^3/3 - x^4/4 + ...
  const double x = 1e-3;
  double tail = 0.0;
  for (int j = 8; j >= 3; --j) tail += (j % 2 ? 1.0 : -1.0) * std::pow(x, j) / j;
  EXPECT_NEAR(log1p_remainder(x, 2), tail, 1e-24);
  EXPECT_NEAR(log1p_remainder(0.9, 1), std::log1p(0.9) - 0.9, 1e-15);
}

// The lemmas that are true on their full stated domains.
TEST(Lemmas, ValidLemmasPassOnFullSampleGrid) {
  for (Lemma l : {Lemma::shannon_bounds, Lemma::logmono_ubound, Lemma::logmm_lbound, Lemma::logp_ubound,
                  Lemma::r_pfrac_series, Lemma::logm_ubound, Lemma::r_mfrac_series}) {
    const auto xs = lemma_samples(l, 1000);
    const auto rep = verify_lemma(l, xs);
    EXPECT_TRUE(rep.all_passed()) << to_string(l) << " failures " << rep.failures();
  }
}

TEST(Lemmas, PositiveHalfOfLogpLboundHolds) {
  std::vector<double> xs;
  for (const double x : lemma_samples(Lemma::logp_lbound, 1000))
    if (x > 0) xs.push_back(x);
  EXPECT_TRUE(verify_lemma(Lemma::logp_lbound, xs).all_passed());
}
