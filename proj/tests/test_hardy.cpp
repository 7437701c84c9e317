#include <cmath>

#include <gtest/gtest.h>

#include "dunkl/hardy.hpp"
#include "dunkl/poisson.hpp"

using namespace dunkl;

TEST(Fields, CauchyMatchesSpectralQuadrature) {
  QuadratureSpec spec;
  for (double l : {0.3, 1.0}) {
    const WeightedLine L(l);
    for (int m : {0, 1, 2}) {
      const HalfPlaneField a = cauchy_field(L, 0.7, m);
      const HalfPlaneField b = spectral_field(SpectralDensity::power_exponential(m, 0.7), L, spec);
      for (double x : {-1.5, 0.0, 2.0})
        for (double y : {0.2, 1.0}) EXPECT_LT(std::abs(a(x, y) - b(x, y)), 1e-9) << m << " " << x << " " << y;
    }
  }
}

TEST(Fields, HomogeneousPairIsPoissonPair) {
  const WeightedLine L(0.5);
  const HalfPlaneField F = homogeneous_kernel_field(L, HomogeneousKind::PQ);
  EXPECT_NEAR(F(0.4, 0.9).real(), poisson_closed(L, 0.4, 0.9), 1e-14);
  EXPECT_NEAR(F(0.4, 0.9).imag(), conjugate_closed(L, 0.4, 0.9), 1e-14);
}

TEST(Residuals, AnalyticVersusBroken) {
  const WeightedLine L(0.5);
  const HalfPlaneGrid g = standard_grid();
  EXPECT_LT(cr_residual(cauchy_field(L, 1.0, 1), g), 1e-9);
  EXPECT_LT(harmonicity_residual(cauchy_field(L, 1.0, 1), g), 1e-9);
  EXPECT_GT(cr_residual(broken_field(L), g), 1e-2);
}

// Plancherel: ||F(., y)||_2^2 = c_lambda Gamma(2m + 2lambda + 1) / (2(y + y0))^{2m + 2lambda + 1}
TEST(Norms, SectionNormPlancherel) {
  QuadratureSpec spec;
  const WeightedLine L(0.5);
  for (int m : {1, 2}) {
    const double a = 2.0 * m + 2.0;
    const double want = std::sqrt(L.c() * std::tgamma(a) / std::pow(2.0 * 1.5, a));
    EXPECT_NEAR(section_norm(cauchy_field(L, 1.0, m), 0.5, 2.0, spec), want, 1e-8 * want);
  }
}

TEST(Admission, Rules) {
  const WeightedLine L(0.5);
  EXPECT_FALSE(admits(homogeneous_kernel_field(L, HomogeneousKind::P), 0.5));
  EXPECT_FALSE(admits(cauchy_field(L, 1.0, 0), 1.0));
  EXPECT_TRUE(admits(cauchy_field(L, 1.0, 2), 0.75));
  EXPECT_THROW(require_admitted(cauchy_field(L, 1.0, 0), 1.0), DomainError);
  EXPECT_FALSE(admission_reason(cauchy_field(L, 1.0, 0), 1.0).empty());
}

TEST(Grids, LogAndRefine) {
  const auto g = log_grid(1e-3, 1e2, 6);
  ASSERT_EQ(g.size(), 6u);
  EXPECT_NEAR(g.front(), 1e-3, 1e-18);
  EXPECT_NEAR(g.back(), 1e2, 1e-12);
  const auto r = refine_grid(g);
  ASSERT_EQ(r.size(), 11u);
  for (size_t i = 0; i < g.size(); ++i) EXPECT_EQ(r[2 * i], g[i]);
}
