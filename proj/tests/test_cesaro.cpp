#include <cmath>

#include <gtest/gtest.h>

#include "dunkl/cesaro.hpp"

using namespace dunkl;

TEST(Cesaro, HomogeneousSpotValues) {
  QuadratureSpec spec;
  const WeightedLine L(0.5);
  const HalfPlaneField F = homogeneous_kernel_field(L, HomogeneousKind::P);
  EXPECT_NEAR((cesaro_scalar(F, CesaroWeight(1.0), 0.3, 0.8, spec) / F(0.3, 0.8)).real(), 0.5, 1e-12);
  EXPECT_NEAR((cesaro_scalar(F, CesaroWeight(2.0), 0.3, 0.8, spec) / F(0.3, 0.8)).real(), 1.0 / 3.0, 1e-12);
}

TEST(Cesaro, BoundConstants) {
  EXPECT_NEAR(lp_bound_constant(2.0, 1.0, ProductWeight({0.5})).value, 1.0, 1e-15);
  EXPECT_NEAR(lp_bound_constant(1.0, 1.0, 2.0).value, 0.5, 1e-15);
  const BoundReport b = lp_bound_constant(0.9, 1.0, 2.0);
  EXPECT_NEAR(b.value, 1.0 / 3.0 + 1.0 / (std::exp2(0.9) - 1.0), 1e-15);
  EXPECT_TRUE(b.prefactor_unspecified);
  EXPECT_STREQ(bound_kind_name(b.kind), "series_flagged");
  EXPECT_THROW(ProductWeight({0.5, -1.0}), DomainError);
}

// int_0^1 e^{-2t} t dt = (1 - 3 e^{-2}) / 4
TEST(Cesaro, MultiplierOracle) {
  QuadratureSpec spec;
  const auto phi = SpectralDensity::power_exponential(0, 1.0);
  EXPECT_NEAR(cesaro_multiplier(phi, CesaroWeight(1.0), WeightedLine(0.5), 2.0, spec).real(), (1 - 3 * std::exp(-2.0)) / 4, 1e-13);
}

TEST(Cesaro, HomogeneousRatioIsBeta) {
  QuadratureSpec spec;
  const WeightedLine L(0.5);
  const RatioReport r = operator_ratio(homogeneous_kernel_field(L, HomogeneousKind::P), CesaroWeight(1.0), 1.0, spec,
                                       log_grid(1e-2, 1e1, 5), false);
  EXPECT_NEAR(r.ratio, 0.5, 1e-9);
}

TEST(Cesaro, MajorantDominates) {
  QuadratureSpec spec;
  const WeightedLine L(0.5);
  const HalfPlaneField F = cauchy_field(L, 1.0, 2);
  const CesaroWeight w(1.0);
  for (double x : {-1.0, 0.5})
    for (double y : {0.25, 2.0})
      EXPECT_LE(std::pow(std::abs(cesaro_scalar(F, w, x, y, spec)), 0.9), dyadic_majorant(F, w, 0.9, x, y));
  EXPECT_THROW(dyadic_majorant(F, w, 1.5, 0.0, 1.0), DomainError);
}

TEST(Cesaro, RejectsUnadmittedField) {
  QuadratureSpec spec;
  EXPECT_THROW(operator_ratio(cauchy_field(WeightedLine(0.5), 1.0, 0), CesaroWeight(1.0), 1.0, spec), DomainError);
  EXPECT_THROW(CesaroWeight(0.0), DomainError);
}
