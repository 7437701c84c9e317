#include <cmath>

#include <gtest/gtest.h>

#include "dunkl/dunkl.hpp"
#include "dunkl/profiles.hpp"

using namespace dunkl;

// e^{-x^2/2} is its own transform under the c_lambda normalization.
TEST(Transform, GaussianIsFixed) {
  QuadratureSpec spec;
  for (double l : {0.3, 1.0, 2.5}) {
    const WeightedLine L(l);
    for (double xi : {-3.0, 0.0, 0.5, 2.0}) {
      const cplx got = dunkl_transform(profiles::gaussian(0.5), L, xi, spec);
      EXPECT_NEAR(got.real(), std::exp(-0.5 * xi * xi), 1e-10);
      EXPECT_NEAR(got.imag(), 0.0, 1e-12);
    }
  }
}

// D e^{-x^2/2} = -x e^{-x^2/2} and D <-> i xi, so x e^{-x^2/2} -> -i xi e^{-xi^2/2}.
TEST(Transform, OddGaussian) {
  QuadratureSpec spec;
  const WeightedLine L(0.7);
  for (double xi : {-1.5, 0.4, 2.2}) {
    const cplx got = dunkl_transform(profiles::odd_gaussian(0.5), L, xi, spec);
    EXPECT_LT(std::abs(got - cplx(0, -xi * std::exp(-0.5 * xi * xi))), 1e-10) << xi;
  }
}

TEST(Derivative, Monomials) {
  const double l = 0.8;
  const WeightedLine L(l);
  Profile sq([](double x) { return cplx(x * x); }, Parity::even, kInf, "x^2");
  Profile id([](double x) { return cplx(x); }, Parity::odd, kInf, "x");
  for (double x : {-1.3, 0.2, 2.0}) {
    EXPECT_NEAR(dunkl_derivative(sq, x, L).real(), 2.0 * x, 1e-8);
    EXPECT_NEAR(dunkl_derivative(id, x, L).real(), 1.0 + 2.0 * l, 1e-8);
  }
}

TEST(Derivative, Eigenfunction) {
  const WeightedLine L(1.5);
  for (double xi : {-2.0, 0.7, 3.0}) {
    const Profile e = profiles::kernel(L, xi);
    for (double x : {-1.1, 0.4, 2.5}) EXPECT_LT(std::abs(dunkl_derivative(e, x, L) - cplx(0, xi) * e(x)), 1e-7);
  }
}

// ||e^{-x^2}||_p^p = c_lambda Gamma(lambda + 1/2) / p^{lambda + 1/2}
TEST(Norm, GaussianOracle) {
  QuadratureSpec spec;
  for (double l : {0.3, 1.0})
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
      const WeightedLine L(l);
      const double want = std::pow(L.c() * std::tgamma(l + 0.5) / std::pow(p, l + 0.5), 1.0 / p);
      EXPECT_NEAR(lp_quasinorm(profiles::gaussian(1.0), NormSpec::of(p), L, spec), want, 1e-9 * want);
    }
  EXPECT_NEAR(lp_quasinorm(profiles::gaussian(1.0, 0.3), NormSpec::of(kInf), WeightedLine(0.5), spec), 1.0, 1e-12);
}

TEST(Norm, PSubadditivity) {
  const double a[] = {0.3, -1.2, 2.0, 0.01};
  const auto [lhs, rhs] = p_subadditivity(a, 0.6);
  EXPECT_LE(lhs, rhs);
  EXPECT_THROW(p_subadditivity(a, 1.5), DomainError);
}
