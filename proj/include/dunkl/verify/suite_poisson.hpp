#pragma once

#include <cmath>
#include <vector>

#include "../hardy.hpp"
#include "../poisson.hpp"
#include "../profiles.hpp"
#include "../translation.hpp"
#include "common.hpp"

namespace dunkl::verify {

namespace detail {

// x -> (P f)(x, y) or (Q f)(x, y) as a profile with algebraic decay.
inline Profile kernel_integral_profile(KernelKind kind, const Profile& f, double y, const WeightedLine& line,
                                       const QuadratureSpec& spec) {
  Profile p;
  p.f = [=](double x) { return kernel_integral(kind, f, x, y, line, spec); };
  if (f.parity != Parity::none)
    p.parity = (kind == KernelKind::P) == (f.parity == Parity::even) ? Parity::even : Parity::odd;
  p.length_scale = f.scale() + y;
  p.description = std::string(kind == KernelKind::P ? "P" : "Q") + "[" + f.description + "]";
  return p;
}

// u + iv = Pf + iQf with partials from differentiating the kernels.
inline HalfPlaneField poisson_pair_field(const Profile& f, const WeightedLine& line, const QuadratureSpec& spec) {
  HalfPlaneField F;
  F.line = line;
  F.value = [=](double x, double y) {
    return kernel_integral(KernelKind::P, f, x, y, line, spec) + cplx(0, 1) * kernel_integral(KernelKind::Q, f, x, y, line, spec);
  };
  F.jet = [=](double x, double y) {
    const auto u = kernel_integral_derivatives(KernelKind::P, f, x, y, line, spec);
    const auto v = kernel_integral_derivatives(KernelKind::Q, f, x, y, line, spec);
    const cplx i(0, 1);
    return FieldJet{u[0] + i * v[0], u[1] + i * v[1], u[2] + i * v[2], u[3] + i * v[3], u[4] + i * v[4]};
  };
  F.jet_order = 2;
  F.description = "Pf + iQf, f = " + f.description;
  F.shift = f.scale();
  return F;
}

}  // namespace detail

inline VerificationReport poisson_suite(const SuiteConfig& cfg) {
  const QuadratureSpec& spec = cfg.spec;
  VerificationReport rep;
  rep.suite = "poisson";
  rep.seed = cfg.seed;
  rep.quadrature = spec;
  const std::vector<double> lambdas = {0.3, 0.5, 1.0, 1.5};

  rep.add(run_check("P1", "kernel theta integral", "(tau_x P_y)(-t), (tau_x Q_y)(-t) vs tau applied to the closed forms",
                    1e-10, [&](std::string&) {
                      Sampler s(cfg.seed, 21);
                      // the oracle is one brute-force Jacobi rule, fine enough for the peak at y = 0.05
                      QuadratureSpec brute = spec;
                      brute.jacobi_order = 1024;
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (int i = 0; i < 20; ++i) {
                          const double x = s.nonzero(-3, 3), t = s.nonzero(-3, 3), y = s.uniform(0.05, 2.0);
                          worst = std::max(worst, mixed_gap(poisson_kernel(L, x, y, t, spec),
                                                            translate(poisson_profile(L, y), x, -t, L, brute)));
                          worst = std::max(worst, mixed_gap(conjugate_kernel(L, x, y, t, spec),
                                                            translate(conjugate_profile(L, y), x, -t, L, brute)));
                        }
                        worst = std::max(worst, mixed_gap(poisson_kernel(L, 0.8, 0.6, 0.0, spec), poisson_closed(L, 0.8, 0.6)));
                        worst = std::max(worst, mixed_gap(conjugate_kernel(L, 0.8, 0.6, 0.0, spec), conjugate_closed(L, 0.8, 0.6)));
                      }
                      return worst;
                    }));

  rep.add(run_check("P2", "kernel sign and symmetry", "P kernel > 0; Q(-x, y, -t) = -Q(x, y, t)", 1e-12,
                    [&](std::string& note) {
                      Sampler s(cfg.seed, 22);
                      double worst = 0;
                      int negative = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (int i = 0; i < 40; ++i) {
                          const double x = s.uniform(-5, 5), t = s.uniform(-5, 5), y = s.uniform(0.01, 3.0);
                          if (!(poisson_kernel(L, x, y, t, spec) > 0)) ++negative;
                          const double q = conjugate_kernel(L, x, y, t, spec);
                          worst = std::max(worst, std::abs(conjugate_kernel(L, -x, y, -t, spec) + q) / std::max(1.0, std::abs(q)));
                        }
                      }
                      note = std::to_string(negative) + " non-positive P samples";
                      return negative ? kInf : worst;
                    }));

  rep.add(run_check("P3", "unit mass", "c_lambda int (tau_x P_y)(-t) |t|^{2lambda} dt = 1", 1e-7, [&](std::string&) {
    double worst = 0;
    for (double l : lambdas) {
      WeightedLine L(l);
      for (double x : {0.0, 0.5, -2.0, 6.0})
        for (double y : {0.05, 0.5, 2.0})
          worst = std::max(worst, std::abs(poisson_integral(profiles::constant(), x, y, L, spec) - 1.0));
    }
    return worst;
  }));

  rep.add(run_check("P4", "transform pairs", "F P_y = e^{-y|xi|}, F Q_y = -i sgn(xi) e^{-y|xi|}", 1e-6,
                    [&](std::string& note) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (double y : {0.5, 1.0, 2.0})
                          for (int i = 0; i <= 20; ++i) {
                            const double xi = -5.0 + 0.5 * i, e = std::exp(-y * std::abs(xi));
                            const double sg = xi > 0 ? 1.0 : (xi < 0 ? -1.0 : 0.0);
                            worst = std::max(worst, std::abs(dunkl_transform(poisson_profile(L, y), L, xi, spec) - e));
                            worst = std::max(worst, std::abs(dunkl_transform(conjugate_profile(L, y), L, xi, spec) -
                                                             cplx(0, -sg) * e));
                          }
                      }
                      note = "y in {0.5,1,2}, xi on a 21-point grid of [-5,5], lambda in {0.3,0.5,1,1.5}";
                      return worst;
                    }));

  rep.add(run_check("P5", "spectral route", "direct P f vs c_lambda int e^{-y|xi|} Ff E(ix xi); P P_{y0} = P_{y+y0}", 1e-6,
                    [&](std::string&) {
                      double worst = 0;
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        const Profile g = profiles::gaussian(0.5, 0.3);
                        for (auto [x, y] : std::vector<std::pair<double, double>>{{1, 1}, {-0.7, 0.4}, {2.0, 2.0}})
                          worst = std::max(worst, std::abs(poisson_integral(g, x, y, L, spec) - spectral_poisson(g, x, y, L, spec)));
                        const double y0 = 0.6;
                        for (auto [x, y] : std::vector<std::pair<double, double>>{{0.5, 0.5}, {-1.5, 1.0}})
                          worst = std::max(worst, std::abs(spectral_poisson(poisson_profile(L, y0), x, y, L, spec) -
                                                           poisson_closed(L, x, y + y0)));
                        // x = 0 and real even f: the imaginary part must vanish
                        worst = std::max(worst, 1e4 * std::abs(spectral_poisson(profiles::gaussian(0.5), 0.0, 0.7, L, spec).imag()));
                      }
                      return worst;
                    }));

  rep.add(run_check("P6", "semigroup", "P f(x, y0 + y) = P[P f(., y0)](x, y)", 1e-6, [&](std::string& note) {
    double worst = 0;
    const Profile f = profiles::gaussian(0.5, 0.3);
    for (double l : {0.5, 1.5}) {
      WeightedLine L(l);
      for (auto [y0, y] : std::vector<std::pair<double, double>>{{0.5, 0.5}, {1.0, 0.3}}) {
        const Profile inner = detail::kernel_integral_profile(KernelKind::P, f, y0, L, spec);
        for (double x : {0.4, -1.3})
          worst = std::max(worst, std::abs(poisson_integral(f, x, y0 + y, L, spec) - poisson_integral(inner, x, y, L, spec)));
      }
    }
    note = "gaussian f, (y0,y) in {(0.5,0.5),(1,0.3)}, lambda in {0.5,1.5}";
    return worst;
  }));

  rep.add(run_check("P7", "Poisson contraction", "||P f(., y)||_p <= ||f||_p (largest ratio reported)", 1.0 + 1e-6,
                    [&](std::string&) {
                      double worst = 0;
                      const Profile f = profiles::gaussian(0.5);
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        for (double y : {0.2, 1.0}) {
                          const Profile pf = detail::kernel_integral_profile(KernelKind::P, f, y, L, spec);
                          for (double p : {1.0, 2.0})
                            worst = std::max(worst, lp_quasinorm(pf, NormSpec::of(p), L, spec) /
                                                        lp_quasinorm(f, NormSpec::of(p), L, spec));
                        }
                      }
                      return worst;
                    }));

  rep.add(run_check("P8", "kernel derivatives", "partials under the theta integral vs Richardson differences", 1e-6,
                    [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (auto kind : {KernelKind::P, KernelKind::Q})
                          for (double x : {-1.1, 0.6, 2.5})
                            for (double t : {-0.9, 0.0, 0.61, 3.0}) {
                              const double y = 0.3, h = 1e-3;
                              auto K = [&](double a, double b) {
                                return kind == KernelKind::P ? poisson_kernel(L, a, b, t, spec) : conjugate_kernel(L, a, b, t, spec);
                              };
                              auto d1 = [&](auto&& g, double c) { return richardson_derivative(g, c, h).real(); };
                              auto d2 = [&](auto&& g, double c) {
                                auto sd = [&](double s) { return (g(c + s) - 2.0 * g(c) + g(c - s)) / (s * s); };
                                return (4.0 * sd(0.5 * h) - sd(h)) / 3.0;
                              };
                              auto gx = [&](double a) { return cplx(K(a, y)); };
                              auto gy = [&](double b) { return cplx(K(x, b)); };
                              const auto d = kernel_derivatives(L, kind, x, y, t, spec);
                              const double fx = d1(gx, x), fy = d1(gy, y);
                              const double fxx = d2([&](double a) { return K(a, y); }, x);
                              const double fyy = d2([&](double b) { return K(x, b); }, y);
                              for (auto [a, b] : {std::pair{d.value, K(x, y)}, std::pair{d.dx, fx}, std::pair{d.dy, fy},
                                                  std::pair{d.dxx, fxx}, std::pair{d.dyy, fyy}})
                                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
                            }
                      }
                      return worst;
                    }));

  rep.add(run_check("P9", "derivative estimates", "|dK| (y^2 + (|x|-|z|)^2)^e bounded on the grid (largest constant)", 1e6,
                    [&](std::string& note) {
                      double worst = 0;
                      const DerivativeGrid g = default_derivative_grid();
                      for (double l : {0.3, 0.5, 1.0}) {
                        WeightedLine L(l);
                        for (auto kind : {KernelKind::P, KernelKind::Q})
                          for (auto order : {DerivativeOrder::first_x, DerivativeOrder::first_y, DerivativeOrder::second}) {
                            const double r = kernel_derivative_ratio(L, kind, order, g, spec);
                            worst = std::max(worst, r);
                            if (l == 0.5) note += fmt(r) + " ";
                          }
                      }
                      note = "empirical constants at lambda 0.5 (P: x, y, 2nd; Q: x, y, 2nd): " + note;
                      return worst;
                    }));

  rep.add(run_check("P10", "derivative scaling", "ratio unchanged when (x, y, z) -> (x, y, z)/t, t in {0.5, 0.25}", 1e-3,
                    [&](std::string&) {
                      double worst = 0;
                      DerivativeGrid g;
                      g.ys = {0.05, 0.3, 2.0};
                      g.xs = {-3.0, -0.7, 0.4, 2.2};
                      g.zs = {-2.5, -0.2, 0.9, 3.1};
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        for (auto kind : {KernelKind::P, KernelKind::Q})
                          for (auto order : {DerivativeOrder::first_x, DerivativeOrder::first_y}) {
                            const double base = kernel_derivative_ratio(L, kind, order, g, spec);
                            for (double t : {0.5, 0.25}) {
                              DerivativeGrid h = g;
                              for (auto* v : {&h.xs, &h.ys, &h.zs})
                                for (double& e : *v) e /= t;
                              worst = std::max(worst, std::abs(kernel_derivative_ratio(L, kind, order, h, spec) / base - 1.0));
                            }
                          }
                      }
                      return worst;
                    }));

  rep.add(run_check("P11", "boundary convergence", "||P f(., y) - f||_2 decreases to below 1e-3 as y -> 0", 1e-3,
                    [&](std::string& note) {
                      WeightedLine L(0.5);
                      const Profile f = profiles::gaussian(0.5);
                      // three digits of the outer norm suffice; at the full line tolerance the
                      // refinement chases the inner quadrature noise in the far tail of Pf - f
                      QuadratureSpec outer = spec;
                      outer.line_tolerance = std::max(spec.line_tolerance, 1e-6);
                      double prev = kInf, last = kInf;
                      bool decreasing = true;
                      for (double y : {1.0, 0.1, 0.01, 0.001}) {
                        const Profile pf = detail::kernel_integral_profile(KernelKind::P, f, y, L, spec);
                        Profile diff([pf, f](double x) { return pf(x) - f(x); }, Parity::none, kInf, "Pf - f");
                        diff.parity = Parity::even;
                        diff.length_scale = 1.0;
                        last = lp_quasinorm(diff, NormSpec::of(2), L, outer);
                        decreasing = decreasing && last < prev;
                        prev = last;
                        note += "y=" + fmt(y) + ": " + fmt(last) + "; ";
                      }
                      if (!decreasing) note += "not decreasing";
                      return decreasing ? last : kInf;
                    }));

  rep.add(run_check("P12", "Poisson pair is lambda-analytic", "u = P f, v = Q f satisfy D_x u = v_y, u_y = -D_x v", 1e-5,
                    [&](std::string&) {
                      double worst = 0;
                      HalfPlaneGrid g;
                      g.xs = {-1.5, -0.5, 0.0, 0.7, 1.8};
                      g.ys = {0.3, 1.0, 2.5};
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        worst = std::max(worst, cr_residual(detail::poisson_pair_field(profiles::gaussian(0.5, 0.3), L, spec), g));
                      }
                      return worst;
                    }));

  return rep;
}

}  // namespace dunkl::verify
