#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "../dunkl.hpp"
#include "../profiles.hpp"
#include "common.hpp"

namespace dunkl::verify {

namespace detail {

// Moments of t^k against (1-t)^a (1+t)^b. Integrating d/dt[(1-t^2) t^k w] over
// [-1,1] gives (k+2+a+b) m_{k+1} = k m_{k-1} + (b-a) m_k.
inline std::vector<long double> jacobi_moments(double a, double b, int kmax) {
  std::vector<long double> m(kmax + 1);
  m[0] = std::exp2(static_cast<long double>(a + b + 1)) * std::beta(a + 1.0, b + 1.0);
  if (kmax >= 1) m[1] = m[0] * (b - a) / (a + b + 2.0);
  for (int k = 1; k < kmax; ++k) m[k + 1] = (k * m[k - 1] + (b - a) * m[k]) / (k + 2.0L + a + b);
  return m;
}

inline Profile random_profile(Sampler& s) {
  const double a1 = s.uniform(0.3, 2.0), b1 = s.uniform(-1.5, 1.5), c1 = s.uniform(-2.0, 2.0);
  const double a2 = s.uniform(0.3, 2.0), c2 = s.uniform(-2.0, 2.0), c3 = s.uniform(-1.0, 1.0);
  const double decay = 1.0 / std::sqrt(2.0 * std::min(a1, a2));
  Profile p(
      [=](double x) {
        return cplx(c1 * std::exp(-a1 * (x - b1) * (x - b1)) + (c2 + c3 * x * x) * x * std::exp(-a2 * x * x));
      },
      Parity::none, decay, "random gaussian-polynomial");
  p.length_scale = decay + std::abs(b1);
  return p;
}

}  // namespace detail

inline VerificationReport kernels_suite(const SuiteConfig& cfg) {
  const QuadratureSpec& spec = cfg.spec;
  VerificationReport rep;
  rep.suite = "kernels";
  rep.seed = cfg.seed;
  rep.quadrature = spec;
  const std::vector<double> lambdas = {0.3, 0.5, 1.0, 2.5};

  rep.add(run_check("K1", "Gauss-Jacobi exactness", "rule integrates t^k, k <= 2n-1, against (1-t)^a(1+t)^b",
                    1e-12, [&](std::string& note) {
                      const int n = spec.jacobi_order;
                      double worst = 0;
                      for (auto [a, b] : std::vector<std::pair<double, double>>{
                               {0.0, 0.0}, {-0.5, 0.7}, {-0.7, -0.7}, {0.0, 1.5}, {1.5, -0.5}}) {
                        const auto& rule = *jacobi_rule(a, b, n);
                        const auto m = detail::jacobi_moments(a, b, 2 * n - 1);
                        for (int k = 0; k <= 2 * n - 1; ++k) {
                          long double q = 0, scale = 0;
                          for (int i = 0; i < n; ++i) {
                            const long double tk = std::pow(static_cast<long double>(rule.nodes()[i]), k);
                            q += rule.weights()[i] * tk;
                            scale += rule.weights()[i] * std::abs(tk);
                          }
                          worst = std::max(worst, static_cast<double>(std::abs(q - m[k]) / scale));
                        }
                      }
                      const auto mid = build_jacobi_rule(0, 0, 1);
                      worst = std::max({worst, std::abs(mid.nodes()[0]), std::abs(mid.weights()[0] - 2.0)});
                      const double odd = jacobi_rule(0, 0, 5)->sum([](double t) { return std::pow(t, 9); });
                      worst = std::max(worst, std::abs(odd));
                      note = "errors relative to the rule's absolute moment; order " + std::to_string(n);
                      return worst;
                    }));

  rep.add(run_check("K2", "Jacobi normalization", "c'_lambda int (1+t)(1-t^2)^{lambda-1} dt = E_lambda(0) = 1", 1e-12,
                    [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        const double got = jacobi_rule(l - 1.0, l - 1.0, spec.jacobi_order)->sum([](double t) {
                          return 1.0 + t;
                        });
                        const double want = std::tgamma(l) * std::sqrt(std::numbers::pi) / std::tgamma(l + 0.5);
                        worst = std::max(worst, std::abs(got / want - 1.0));
                      }
                      return worst;
                    }));

  rep.add(run_check("K3", "rule-order convergence", "doubling the order never increases the Beta-oracle error", 1.0,
                    [&](std::string& note) {
                      // int (1-t^2)^{lambda-1} (1-t^2)^{1/3} dt = B(1/2, lambda + 1/3)
                      double worst = 0;
                      for (double l : lambdas) {
                        const double want = std::beta(0.5, l + 1.0 / 3.0);
                        double prev = -1;
                        for (int n = 4; n <= 256; n *= 2) {
                          const double got = jacobi_rule(l - 1.0, l - 1.0, n)->sum([](double t) {
                            return std::cbrt(1.0 - t * t);
                          });
                          const double err = std::abs(got - want);
                          if (prev >= 0) worst = std::max(worst, err / std::max(prev, 1e-15 * want));
                          prev = err;
                        }
                      }
                      note = "largest err(2n)/err(n), orders 4..256; errors under 1e-15 relative count as converged";
                      return worst;
                    }));

  rep.add(run_check("K4", "half-line oracles", "exp(-x), x^{2l} e^{-yx}, e^{-x} sin x against closed forms",
                    spec.line_tolerance, [&](std::string&) {
                      double worst = std::abs(integrate_halfline([](double x) { return cplx(std::exp(-x)); }, 1.0,
                                                                 spec) -
                                              1.0);
                      for (double l : lambdas)
                        for (double y : {0.5, 1.3, 4.0}) {
                          const cplx got =
                              integrate_halfline([y](double x) { return cplx(std::exp(-y * x)); }, 1.0 / y, spec, 2 * l);
                          worst = std::max(worst, rel_gap(got, std::tgamma(2 * l + 1) / std::pow(y, 2 * l + 1)));
                        }
                      const cplx s = integrate_halfline([](double x) { return cplx(std::exp(-x) * std::sin(x)); }, 1.0,
                                                        spec);
                      return std::max(worst, std::abs(s - 0.5) / 0.5);
                    }));

  rep.add(run_check("K5", "weighted-line oracles", "c_lambda int e^{-x^2/2}|x|^{2lambda} dx = 1; odd -> 0; 1_[0,1] at 1/2",
                    spec.line_tolerance, [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        worst = std::max(worst, std::abs(L.c() * integrate_weighted_line(profiles::gaussian(0.5), L, spec) - 1.0));
                        worst = std::max(worst, std::abs(integrate_weighted_line(profiles::odd_gaussian(0.8), L, spec)));
                      }
                      Profile box([](double x) { return cplx(x >= 0 && x <= 1 ? 1.0 : 0.0); }, Parity::none, kInf,
                                  "indicator of [0,1]");
                      box.support = 1.0;
                      worst = std::max(worst, std::abs(integrate_weighted_line(box, WeightedLine(0.5), spec) - 0.5) / 0.5);
                      return worst;
                    }));

  rep.add(run_check("K6", "linearity", "int(af+bg) = a int f + b int g", 2.0 * spec.line_tolerance,
                    [&](std::string&) {
                      Sampler s(cfg.seed, 1);
                      double worst = 0;
                      for (int i = 0; i < 8; ++i) {
                        WeightedLine L(s.uniform(0.2, 2.0));
                        const Profile f = detail::random_profile(s), g = detail::random_profile(s);
                        const double a = s.uniform(-2, 2), b = s.uniform(-2, 2);
                        Profile h([=](double x) { return a * f(x) + b * g(x); }, Parity::none,
                                  std::max(f.decay_scale, g.decay_scale), "a f + b g");
                        h.length_scale = std::max(f.length_scale, g.length_scale);
                        const cplx lhs = integrate_weighted_line(h, L, spec);
                        const cplx rhs = a * integrate_weighted_line(f, L, spec) + b * integrate_weighted_line(g, L, spec);
                        worst = std::max(worst, mixed_gap(lhs, rhs));
                      }
                      return worst;
                    }));

  rep.add(run_check("K7", "parity", "real even f integrates to a real value", 1e-13, [&](std::string&) {
    double worst = 0;
    for (double l : lambdas) {
      WeightedLine L(l);
      for (const Profile& f : {profiles::gaussian(0.7), profiles::bump(0.0, 1.5), profiles::annulus_bump(0.5, 2.0)})
        worst = std::max(worst, std::abs(integrate_weighted_line(f, L, spec).imag()));
    }
    return worst;
  }));

  rep.add(run_check("K8", "Bessel identities", "j_alpha(0) = 1, j_{-1/2}(z) = cos z, j_{1/2}(z) = sin z / z", 1e-12,
                    [&](std::string& note) {
                      // Complex z inside the series radius lose a few digits to cancellation
                      // (|cos(20-3i)| = 10 from terms near cosh|z|).
                      note = "relative to max(1,|value|); complex z up to |z| = 45";
                      double worst = 0;
                      for (double a : {-0.5, -0.2, 0.3, 1.0, 2.5}) worst = std::max(worst, std::abs(bessel_norm(a, 0.0) - 1.0));
                      for (int i = 1; i <= 400; ++i) {
                        const double z = 0.25 * i;
                        worst = std::max(worst, std::abs(bessel_norm(-0.5, z) - std::cos(z)));
                        worst = std::max(worst, std::abs(bessel_norm(0.5, z) - std::sin(z) / z));
                      }
                      for (cplx z : {cplx(2, 1), cplx(-7, 0.5), cplx(20, -3), cplx(45, 2)}) {
                        worst = std::max(worst, mixed_gap(bessel_norm(-0.5, z), std::cos(z)));
                        worst = std::max(worst, mixed_gap(bessel_norm(0.5, z), std::sin(z) / z));
                      }
                      return worst;
                    }));

  rep.add(run_check("K9", "kernel duality", "E_lambda(iz): Bessel series vs c'_lambda integral, relative gap", 1e-9,
                    [&](std::string& note) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (int i = 0; i <= 200; ++i) {
                          const double z = -50.0 + 0.5 * i;
                          const cplx s = dunkl_kernel_series(L, z);
                          worst = std::max(worst, rel_gap(dunkl_kernel_integral(L, z, spec), s));
                        }
                      }
                      note = "lambda in {0.3,0.5,1,2.5}, 201 points on [-50,50]";
                      return worst;
                    }));

  rep.add(run_check("K10", "kernel properties",
                    "E(0) = 1, E(-iz) = conj E(iz), |E| <= 1, tabulated E vs series, classical e^{iz}", 1e-10,
                    [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        worst = std::max(worst, std::abs(dunkl_kernel_series(L, 0.0) - 1.0));
                        for (int i = 0; i <= 400; ++i) {
                          const double z = -100.0 + 0.5 * i;
                          const cplx e = dunkl_kernel_series(L, z);
                          worst = std::max(worst, std::abs(dunkl_kernel_series(L, -z) - std::conj(e)));
                          worst = std::max(worst, std::max(0.0, std::abs(e) - 1.0));
                          worst = std::max(worst, std::abs(L.kernel(z) - e));
                        }
                      }
                      for (int i = 0; i <= 200; ++i) {
                        const double z = -50.0 + 0.5 * i;
                        const cplx e0 = bessel_norm(-0.5, z) + cplx(0, z) * bessel_norm(0.5, z);
                        worst = std::max(worst, std::abs(e0 - classical::kernel(z)));
                      }
                      return worst;
                    }));

  rep.add(run_check("K11", "eigenrelation", "D_x E_lambda(i x xi) = i xi E_lambda(i x xi)", 1e-7,
                    [&](std::string& note) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (int i = 0; i < 15; ++i)
                          for (int j = 0; j < 15; ++j) {
                            const double x = -5.0 + 10.0 * i / 14, xi = -5.0 + 10.0 * j / 14;
                            Profile p = profiles::kernel(L, xi);
                            const cplx want = cplx(0, xi) * L.kernel(x * xi);
                            worst = std::max(worst, std::abs(dunkl_derivative(p, x, L) - want));
                            p.derivative = nullptr;
                            worst = std::max(worst, std::abs(dunkl_derivative(p, x, L) - want));
                          }
                      }
                      note = "15x15 (x, xi) grid on [-5,5]^2 incl. x = 0, analytic and finite-difference paths";
                      return worst;
                    }));

  rep.add(run_check("K12", "Dunkl derivative examples", "D x = 1 + 2 lambda; D f = f' for even f", 1e-8,
                    [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        Profile id([](double x) { return cplx(x); }, Parity::odd, kInf, "x");
                        Profile g = profiles::gaussian(0.6);
                        for (double x : {-3.0, -0.4, 0.0, 1e-9, 0.7, 2.0}) {
                          worst = std::max(worst, std::abs(dunkl_derivative(id, x, L) - (1.0 + 2.0 * l)));
                          worst = std::max(worst, std::abs(dunkl_derivative(g, x, L) - g.derivative(x)));
                        }
                      }
                      return worst;
                    }));

  rep.add(run_check("K13", "derivative cross-check", "analytic profile derivatives vs finite differences", 1e-6,
                    [&](std::string&) {
                      double worst = 0;
                      WeightedLine L(0.5);
                      for (const Profile& f : {profiles::gaussian(0.5, 0.3), profiles::odd_gaussian(0.9),
                                               profiles::bump(0.4, 1.2), profiles::kernel(L, 2.5)})
                        for (double x : {-1.7, -0.35, 0.0, 0.5, 1.1}) {
                          const cplx fd = richardson_derivative(f.f, x, fd_step(x));
                          worst = std::max(worst, mixed_gap(fd, f.derivative(x)));
                        }
                      return worst;
                    }));

  rep.add(run_check("K14", "Gaussian transform", "F_lambda(e^{-ax^2})(xi) = (2a)^{-lambda-1/2} e^{-xi^2/4a}, odd part too",
                    1e-8, [&](std::string&) {
                      double worst = 0;
                      const double a = 0.7;
                      const cplx c(0.3, 0.2);
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        const Profile g = profiles::gaussian(a), og = profiles::odd_gaussian(a);
                        Profile mix([g, og, c](double x) { return g(x) + c * og(x); }, Parity::none, g.decay_scale,
                                    "gaussian + c x gaussian");
                        for (double xi : {-3.0, 0.0, 0.5, 1.3, 4.0, 9.0}) {
                          const cplx even = std::pow(2 * a, -l - 0.5) * std::exp(-xi * xi / (4 * a));
                          const cplx odd = cplx(0, -xi / (2 * a)) * even;
                          worst = std::max(worst, std::abs(dunkl_transform(mix, L, xi, spec) - even - c * odd));
                        }
                        const cplx at0 = dunkl_transform(profiles::bump(0.3, 1.0), L, 0.0, spec);
                        if (!(at0.real() > 0) || std::abs(at0.imag()) > 1e-14) worst = kInf;
                      }
                      return worst;
                    }));

  rep.add(run_check("K15", "L^p quasinorm oracles",
                    "||e^{-x^2/2}||_1 = 1, ||c f|| = |c| ||f||, ||P_y||_2^2 = 2 c_lambda Gamma(2lambda+1)/(2y)^{2lambda+1}",
                    1e-8, [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        const Profile g = profiles::gaussian(0.5);
                        worst = std::max(worst, std::abs(lp_quasinorm(g, NormSpec::of(1), L, spec) - 1.0));
                        Profile g3 = g;
                        g3.f = [g](double x) { return -3.0 * g(x); };
                        for (double p : {0.6, 1.0, 2.5})
                          worst = std::max(worst, std::abs(lp_quasinorm(g3, NormSpec::of(p), L, spec) /
                                                               (3.0 * lp_quasinorm(g, NormSpec::of(p), L, spec)) -
                                                           1.0));
                        for (double y : {0.5, 1.0}) {
                          // Plancherel: ||P_y||_2^2 = c_lambda int e^{-2y|xi|} |xi|^{2lambda} dxi
                          const double want = std::sqrt(2.0 * L.c() * std::tgamma(2 * l + 1) / std::pow(2 * y, 2 * l + 1));
                          const Profile P = Profile(
                              [L, y](double x) { return cplx(L.m() * y * std::pow(y * y + x * x, -L.lambda() - 1)); },
                              Parity::even, kInf, "P_y");
                          Profile Py = P;
                          Py.length_scale = y;
                          worst = std::max(worst, std::abs(lp_quasinorm(Py, NormSpec::of(2), L, spec) / want - 1.0));
                        }
                      }
                      return worst;
                    }));

  rep.add(run_check("K16", "Minkowski", "||f+g||_p <= ||f||_p + ||g||_p for p >= 1 (excess reported)", 1e-9,
                    [&](std::string&) {
                      Sampler s(cfg.seed, 2);
                      double worst = -kInf;
                      for (int i = 0; i < 12; ++i) {
                        WeightedLine L(s.uniform(0.2, 2.0));
                        const Profile f = detail::random_profile(s), g = detail::random_profile(s);
                        Profile h([f, g](double x) { return f(x) + g(x); }, Parity::none,
                                  std::max(f.decay_scale, g.decay_scale), "f + g");
                        h.length_scale = std::max(f.length_scale, g.length_scale);
                        for (double p : {1.0, 1.5, 2.0, 3.0}) {
                          const NormSpec n = NormSpec::of(p);
                          worst = std::max(worst, lp_quasinorm(h, n, L, spec) - lp_quasinorm(f, n, L, spec) -
                                                      lp_quasinorm(g, n, L, spec));
                        }
                      }
                      return worst;
                    }));

  rep.add(run_check("K17", "p-subadditivity", "(sum |a_i|)^p <= sum |a_i|^p for p <= 1 (excess reported)", 0.0,
                    [&](std::string&) {
                      Sampler s(cfg.seed, 3);
                      double worst = -kInf;
                      for (int i = 0; i < 200; ++i) {
                        std::vector<double> a(1 + i % 17);
                        for (double& v : a) v = std::abs(s.uniform(-5, 5));
                        const auto [lhs, rhs] = p_subadditivity(a, s.uniform(0.05, 1.0));
                        worst = std::max(worst, lhs - rhs);
                      }
                      return worst;
                    }));

  return rep;
}

}  // namespace dunkl::verify
