#include <cmath>

#include <gtest/gtest.h>

#include "dunkl/dunkl.hpp"

using namespace dunkl;

// Spherical Bessel closed forms of the normalized j_alpha.
TEST(Bessel, HalfIntegerOrders) {
  for (double z : {0.01, 0.5, 2.9, 3.1, 7.0, 24.0, 26.0, 60.0}) {
    EXPECT_NEAR(bessel_norm(-0.5, z), std::cos(z), 1e-13);
    EXPECT_NEAR(bessel_norm(0.5, z), std::sin(z) / z, 1e-13);
    const double j32 = 3.0 * (std::sin(z) - z * std::cos(z)) / (z * z * z);
    EXPECT_NEAR(bessel_norm(1.5, z), z < 0.1 ? 1.0 - z * z / 10.0 + z * z * z * z / 280.0 : j32, 1e-12) << z;
  }
  EXPECT_DOUBLE_EQ(bessel_norm(0.7, 0.0), 1.0);
}

TEST(Bessel, ComplexArgument) {
  for (cplx z : {cplx(1.0, 0.5), cplx(-4.0, 2.0), cplx(20.0, -3.0), cplx(40.0, 1.0)})
    EXPECT_LT(std::abs(bessel_norm(-0.5, z) - std::cos(z)) / std::max(1.0, std::abs(std::cos(z))), 1e-12) << z;
}

// lambda = 1: E(iz) = sin z / z + i (sin z - z cos z) / z^2
TEST(Kernel, LambdaOneClosedForm) {
  const WeightedLine L(1.0);
  QuadratureSpec spec;
  for (double z : {-30.0, -2.0, 0.3, 5.0, 20.0, 100.0, 250.0}) {
    const cplx want(std::sin(z) / z, (std::sin(z) - z * std::cos(z)) / (z * z));
    EXPECT_LT(std::abs(dunkl_kernel_series(L, z) - want), 1e-12) << z;
    EXPECT_LT(std::abs(L.kernel(z) - want), 1e-11) << z;
    if (std::abs(z) <= 50) EXPECT_LT(std::abs(dunkl_kernel_integral(L, z, spec) - want), 1e-11) << z;
  }
}

TEST(Kernel, UnitAtZeroAndModulusBound) {
  for (double l : {0.3, 0.5, 2.5}) {
    const WeightedLine L(l);
    EXPECT_NEAR(std::abs(dunkl_kernel_series(L, 0.0) - 1.0), 0.0, 1e-15);
    for (double z = -40; z <= 40; z += 0.37) EXPECT_LE(std::abs(dunkl_kernel_series(L, z)), 1.0 + 1e-12);
  }
}

TEST(Line, RejectsNonPositiveLambda) {
  EXPECT_THROW(WeightedLine(0.0), DomainError);
  EXPECT_THROW(WeightedLine(-1.0), DomainError);
}
