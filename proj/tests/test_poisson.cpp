#include <cmath>

#include <gtest/gtest.h>

#include "dunkl/poisson.hpp"
#include "dunkl/profiles.hpp"

using namespace dunkl;

// P_y(x) = m_lambda y / (y^2 + x^2)^{lambda + 1}, Q_y(x) = m_lambda x / (y^2 + x^2)^{lambda + 1}
TEST(Poisson, ClosedForms) {
  for (double l : {0.3, 1.0}) {
    const WeightedLine L(l);
    const double m = std::pow(2.0, l + 0.5) * std::tgamma(l + 1.0) / std::sqrt(std::numbers::pi);
    for (double x : {-2.0, 0.0, 0.7})
      for (double y : {0.1, 1.0}) {
        EXPECT_NEAR(poisson_closed(L, x, y), m * y / std::pow(y * y + x * x, l + 1.0), 1e-12);
        EXPECT_NEAR(conjugate_closed(L, x, y), m * x / std::pow(y * y + x * x, l + 1.0), 1e-12);
      }
  }
}

TEST(Poisson, KernelReducesAtOrigin) {
  QuadratureSpec spec;
  const WeightedLine L(0.6);
  EXPECT_NEAR(poisson_kernel(L, 1.3, 0.5, 0.0, spec), poisson_closed(L, 1.3, 0.5), 1e-13);
  EXPECT_NEAR(poisson_kernel(L, 0.0, 0.5, -1.3, spec), poisson_closed(L, 1.3, 0.5), 1e-13);
  EXPECT_GT(poisson_kernel(L, 2.0, 0.05, -1.9, spec), 0.0);
  EXPECT_THROW(poisson_kernel(L, 1.0, 0.0, 1.0, spec), DomainError);
}

// P_y * 1 = 1 and P_y * P_s = P_{y+s}
TEST(Poisson, MassAndSemigroup) {
  QuadratureSpec spec;
  const WeightedLine L(0.5);
  EXPECT_NEAR(poisson_integral(profiles::constant(1.0), 0.8, 0.3, L, spec).real(), 1.0, 1e-8);
  for (double x : {0.0, 1.1})
    EXPECT_NEAR(poisson_integral(poisson_profile(L, 0.4), x, 0.6, L, spec).real(), poisson_closed(L, x, 1.0), 1e-8);
}

TEST(Poisson, TransformPair) {
  QuadratureSpec spec;
  const WeightedLine L(1.0);
  for (double xi : {-2.0, 0.5, 3.0}) {
    EXPECT_LT(std::abs(dunkl_transform(poisson_profile(L, 1.0), L, xi, spec) - std::exp(-std::abs(xi))), 1e-8);
    const double s = xi > 0 ? 1.0 : -1.0;
    EXPECT_LT(std::abs(dunkl_transform(conjugate_profile(L, 1.0), L, xi, spec) - cplx(0, -s * std::exp(-std::abs(xi)))), 1e-8);
  }
}
