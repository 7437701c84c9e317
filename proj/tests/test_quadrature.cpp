#include <cmath>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dunkl/quadrature.hpp"

using namespace dunkl;

// int_0^1 s^k (1-s)^a s^b ds = B(b + k + 1, a + 1)
TEST(Jacobi, MomentsMatchBeta) {
  for (double a : {-0.5, 0.0, 0.7, 2.5})
    for (double b : {-0.3, 0.0, 1.5}) {
      const auto rule = jacobi_rule(a, b, 12);
      for (int k = 0; k <= 20; ++k) {
        const double got = rule->integrate_on(0.0, 1.0, [k](double s) { return std::pow(s, k); });
        EXPECT_NEAR(got, std::beta(b + k + 1.0, a + 1.0), 1e-13 * std::beta(b + k + 1.0, a + 1.0)) << a << " " << b << " " << k;
      }
    }
}

TEST(Jacobi, RulesAreCached) { EXPECT_EQ(jacobi_rule(0.25, 0.5, 16).get(), jacobi_rule(0.25, 0.5, 16).get()); }

TEST(Legendre, SineIntegral) {
  EXPECT_NEAR(legendre_rule(20).integrate_on(0.0, std::numbers::pi, [](double x) { return std::sin(x); }), 2.0, 1e-14);
}

TEST(Halfline, GammaIntegrals) {
  QuadratureSpec spec;
  for (double s : {0.0, 0.6, 1.0, 3.0})
    EXPECT_NEAR(integrate_halfline([](double x) { return cplx(std::exp(-x)); }, 1.0, spec, s).real(), std::tgamma(s + 1.0),
                1e-10 * std::tgamma(s + 1.0));
}

// int_0^inf x^{2l} (1 + x^2)^{-l-1} dx = B(l + 1/2, 1/2) / 2: algebraic tail
TEST(Halfline, AlgebraicTail) {
  QuadratureSpec spec;
  for (double l : {0.3, 0.5, 1.0}) {
    HalflineShape shape;
    shape.exponential = false;
    auto r = integrate_zero_to_inf([l](double x) { return cplx(std::pow(1.0 + x * x, -l - 1.0)); }, 2.0 * l, shape, spec);
    EXPECT_NEAR(r.value.real(), 0.5 * std::beta(l + 0.5, 0.5), 1e-9);
  }
}

TEST(Spec, JsonRoundTripAndDefaults) {
  QuadratureSpec q;
  q.jacobi_order = 96;
  q.line_tolerance = 3e-11;
  const nlohmann::json j = q;
  EXPECT_EQ(j.get<QuadratureSpec>(), q);
  EXPECT_EQ(nlohmann::json::object().get<QuadratureSpec>(), QuadratureSpec{});
  EXPECT_EQ(QuadratureSpec{}.max_refinement_levels, 30);
}

TEST(Spec, RejectsBadValues) {
  EXPECT_THROW((nlohmann::json{{"jacobi_order", 0}}.get<QuadratureSpec>()), DomainError);
  EXPECT_THROW((nlohmann::json{{"line_tolerance", 2.0}}.get<QuadratureSpec>()), DomainError);
}
