#include <cmath>

#include <gtest/gtest.h>

#include "dunkl/profiles.hpp"
#include "dunkl/translation.hpp"

using namespace dunkl;

// tau_t E(i . xi)(x) = E(i x xi) E(i t xi)
TEST(Translation, ProductFormula) {
  QuadratureSpec spec;
  for (double l : {0.5, 1.5}) {
    const WeightedLine L(l);
    for (double xi : {0.5, 2.0})
      for (auto [x, t] : {std::pair{1.0, 2.0}, std::pair{-0.7, 1.3}, std::pair{2.5, -0.4}}) {
        const cplx want = L.kernel(x * xi) * L.kernel(t * xi);
        EXPECT_LT(std::abs(translate(profiles::kernel(L, xi), t, x, L, spec) - want), 1e-9);
      }
  }
}

TEST(Translation, ConstantsAndOrigin) {
  QuadratureSpec spec;
  const WeightedLine L(0.8);
  EXPECT_NEAR(translate(profiles::constant(1.0), 0.6, -1.7, L, spec).real(), 1.0, 1e-12);
  const Profile g = profiles::gaussian(0.5, 0.4);
  EXPECT_NEAR(std::abs(translate(g, 0.0, 1.1, L, spec) - g(1.1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(translate(g, 1.1, 0.0, L, spec) - g(1.1)), 0.0, 1e-15);
}

// The W kernel integrates the same translation as the theta form.
TEST(Translation, WKernelAgrees) {
  QuadratureSpec spec;
  const WeightedLine L(1.5);
  const Profile g = profiles::gaussian(0.5, 0.4);
  for (auto [x, t] : {std::pair{1.0, 0.5}, std::pair{-2.0, 0.9}}) {
    const cplx w = TranslationKernel(L, x, t).integrate([&](double z) { return g(z); }, 64);
    EXPECT_LT(std::abs(w - translate(g, t, x, L, spec)), 1e-10);
  }
  EXPECT_EQ(w_kernel(L, 1.0, 0.5, 2.0), 0.0);  // outside ||x|-|t||, |x|+|t|
  EXPECT_THROW(TranslationKernel(L, 0.0, 1.0), DomainError);
}

TEST(Convolution, SupportOfBumps) {
  QuadratureSpec spec;
  const WeightedLine L(0.5);
  const Profile a = profiles::bump(0.0, 0.5), b = profiles::bump(0.0, 0.7);
  EXPECT_EQ(std::abs(convolve(a, b, 1.3, L, spec)), 0.0);
  EXPECT_GT(std::abs(convolve(a, b, 0.9, L, spec)), 0.0);
}
