#pragma once

#include <cmath>
#include <vector>

#include "../profiles.hpp"
#include "../translation.hpp"
#include "common.hpp"

namespace dunkl::verify {

namespace detail {

// c_lambda int f g |x|^{2 lambda} dx
inline cplx pairing(const Profile& f, const Profile& g, const WeightedLine& line, const QuadratureSpec& spec) {
  HalflineShape shape;
  shape.scale = std::max(f.scale(), g.scale());
  shape.exponential = std::isfinite(f.decay_scale) || std::isfinite(g.decay_scale);
  shape.support = std::min(f.support, g.support);
  return line.c() *
         integrate_weighted([&](double x) { return f(x) * g(x); }, line.lambda(), Parity::none, shape, spec).value;
}

inline double norm(const Profile& f, double p, const WeightedLine& line, const QuadratureSpec& spec) {
  return lp_quasinorm(f, NormSpec::of(p), line, spec);
}

}  // namespace detail

inline VerificationReport translation_suite(const SuiteConfig& cfg) {
  const QuadratureSpec& spec = cfg.spec;
  VerificationReport rep;
  rep.suite = "translation";
  rep.seed = cfg.seed;
  rep.quadrature = spec;
  const Profile gauss = profiles::gaussian(0.5, 0.7);  // off-centre, so both parity parts matter

  rep.add(run_check("T1", "mass preservation", "tau_t 1 = 1", 1e-10, [&](std::string&) {
    Sampler s(cfg.seed, 11);
    double worst = 0;
    for (double l : {0.3, 0.5, 1.5}) {
      WeightedLine L(l);
      for (int i = 0; i < 50; ++i)
        worst = std::max(worst, std::abs(translate(profiles::constant(), s.uniform(-4, 4), s.uniform(-4, 4), L, spec) - 1.0));
    }
    return worst;
  }));

  rep.add(run_check("T2", "translation symmetry", "(tau_t f)(x) = (tau_x f)(t)", 1e-8, [&](std::string&) {
    Sampler s(cfg.seed, 12);
    double worst = 0;
    for (double l : {0.3, 0.5, 1.5}) {
      WeightedLine L(l);
      for (int i = 0; i < 50; ++i) {
        const double x = s.uniform(-4, 4), t = s.uniform(-4, 4);
        worst = std::max(worst, std::abs(translate(gauss, t, x, L, spec) - translate(gauss, x, t, L, spec)));
      }
    }
    return worst;
  }));

  rep.add(run_check("T3", "theta form vs W kernel form", "tau_t f by the theta integral and by int f dnu_{x,t}", 1e-8,
                    [&](std::string&) {
                      Sampler s(cfg.seed, 13);
                      double worst = 0;
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        for (int i = 0; i < 50; ++i) {
                          const double x = s.nonzero(-4, 4), t = s.nonzero(-4, 4);
                          worst = std::max(worst, std::abs(translate(gauss, t, x, L, spec) -
                                                           translate_zform(gauss, t, x, L, spec)));
                        }
                      }
                      return worst;
                    }));

  rep.add(run_check("T4", "product formula", "E(ix xi) E(it xi) = int E(iz xi) dnu_{x,t}(z)", 1e-6,
                    [&](std::string& note) {
                      Sampler s(cfg.seed, 14);
                      double worst = 0;
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        for (int i = 0; i < 50; ++i) {
                          const double x = s.nonzero(-4, 4), t = s.nonzero(-4, 4), xi = s.uniform(-4, 4);
                          worst = std::max(worst, product_formula_residual(L, x, t, xi, spec));
                          // the residual is symmetric in x and t
                          worst = std::max(worst, product_formula_residual(L, t, x, xi, spec));
                        }
                        worst = std::max(worst, product_formula_residual(L, 1.3, -0.8, 0.0, spec));
                      }
                      worst = std::max(worst, product_formula_residual(WeightedLine(0.5), 1.0, 2.0, 3.0, spec));
                      note = "50 random (x,t,xi) in [-4,4]^3 per lambda in {0.5,1.5}, both orders of (x,t)";
                      return worst;
                    }));

  rep.add(run_check("T5", "W kernel", "support in ||x|-|t|| < |z| < |x|+|t|, W(x,t,z) = W(t,x,z), unit mass", 1e-10,
                    [&](std::string&) {
                      Sampler s(cfg.seed, 15);
                      double worst = 0;
                      for (double l : {0.3, 0.5, 1.0, 1.5}) {
                        WeightedLine L(l);
                        for (int i = 0; i < 20; ++i) {
                          const double x = s.nonzero(-3, 3, 0.1), t = s.nonzero(-3, 3, 0.1);
                          TranslationKernel W(L, x, t);
                          worst = std::max(worst, std::abs(W(W.upper() * 1.01)) + std::abs(W(-W.upper() - 0.5)));
                          if (W.lower() > 0.05) worst = std::max(worst, std::abs(W(0.5 * W.lower())));
                          for (int k = 1; k < 8; ++k) {
                            const double z = (k % 2 ? 1 : -1) * (W.lower() + (W.upper() - W.lower()) * k / 8.0);
                            const double a = W(z), b = w_kernel(L, t, x, z);
                            worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
                          }
                          worst = std::max(worst, std::abs(W.integrate([](double) { return 1.0; }, spec.jacobi_order) - 1.0));
                        }
                      }
                      return worst;
                    }));

  rep.add(run_check("T6", "translation norm bound", "||tau_t f||_p <= 4 ||f||_p (largest ratio reported)", 4.0,
                    [&](std::string& note) {
                      double worst = 0;
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        for (const Profile& f : {profiles::gaussian(0.5, 0.3), profiles::bump(0.5, 1.0)})
                          for (double t : {-2.0, -0.5, 0.5, 2.0}) {
                            const Profile tf = translated_profile(f, t, L, spec);
                            for (double p : {1.0, 2.0, 4.0})
                              worst = std::max(worst, detail::norm(tf, p, L, spec) / detail::norm(f, p, L, spec));
                          }
                      }
                      note = "p in {1,2,4}, t in {+-0.5,+-2}, gaussian and bump, lambda in {0.5,1.5}";
                      return worst;
                    }));

  rep.add(run_check("T7", "Young inequality", "||f*g||_r <= 4 ||f||_p ||g||_q (largest ratio reported)", 4.0,
                    [&](std::string& note) {
                      double worst = 0;
                      const std::vector<std::array<double, 3>> triples = {{1, 1, 1}, {1, 2, 2}, {2, 2, kInf}};
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        const std::vector<std::pair<Profile, Profile>> pairs = {
                            {profiles::gaussian(0.5, 0.3), profiles::gaussian(1.0, -0.4)},
                            {profiles::bump(0.5, 1.0), profiles::bump(-0.3, 0.6)}};
                        for (const auto& [f, g] : pairs) {
                          const Profile fg = convolution_profile(f, g, L, spec);
                          for (auto [p, q, r] : triples)
                            worst = std::max(worst, detail::norm(fg, r, L, spec) /
                                                        (detail::norm(f, p, L, spec) * detail::norm(g, q, L, spec)));
                        }
                      }
                      note = "(p,q,r) in {(1,1,1),(1,2,2),(2,2,inf)}, two profile pairs, lambda in {0.5,1.5}";
                      return worst;
                    }));

  rep.add(run_check("T8", "duality pairing", "<tau_t f, g> = <f, tau_{-t} g>", 1e-7, [&](std::string&) {
    double worst = 0;
    for (double l : {0.5, 1.5}) {
      WeightedLine L(l);
      const Profile f = profiles::gaussian(0.5, 0.3), g = profiles::gaussian(1.0, -0.4);
      for (double t : {-1.2, 0.6, 2.0}) {
        const cplx a = detail::pairing(translated_profile(f, t, L, spec), g, L, spec);
        const cplx b = detail::pairing(f, translated_profile(g, -t, L, spec), L, spec);
        worst = std::max(worst, mixed_gap(a, b));
      }
    }
    return worst;
  }));

  rep.add(run_check("T9", "convolution commutes", "f * g = g * f", 1e-7, [&](std::string&) {
    double worst = 0;
    for (double l : {0.3, 0.5, 1.5}) {
      WeightedLine L(l);
      const Profile f = profiles::gaussian(0.5, 0.3), g = profiles::bump(-0.3, 0.8);
      for (double x : {-2.0, -0.4, 0.0, 0.9, 1.7}) worst = std::max(worst, std::abs(convolve(f, g, x, L, spec) - convolve(g, f, x, L, spec)));
    }
    return worst;
  }));

  rep.add(run_check("T10", "transform of a convolution", "F(f*g) = Ff Fg at lambda = 1/2", 1e-6, [&](std::string&) {
    WeightedLine L(0.5);
    const Profile f = profiles::gaussian(0.5, 0.3), g = profiles::gaussian(1.0, -0.4);
    const Profile fg = convolution_profile(f, g, L, spec);
    double worst = 0;
    for (double xi : {0.0, 0.7, -1.9}) {
      const cplx want = dunkl_transform(f, L, xi, spec) * dunkl_transform(g, L, xi, spec);
      worst = std::max(worst, std::abs(dunkl_transform(fg, L, xi, spec) - want));
    }
    return worst;
  }));

  rep.add(run_check("T11", "convolution support", "supp f in r1<=|x|<=r2, supp g in |x|<=r3 => f*g vanishes off r1-r3<=|x|<=r2+r3",
                    1e-9, [&](std::string&) {
                      double worst = 0;
                      const double r1 = 1.0, r2 = 2.0, r3 = 0.5;
                      const Profile f = profiles::annulus_bump(r1, r2), g = profiles::bump(0.0, r3);
                      for (double l : {0.3, 1.5}) {
                        WeightedLine L(l);
                        for (double x : {0.0, 0.2, -0.45, 2.55, -3.0, 4.0})
                          worst = std::max(worst, std::abs(convolve(f, g, x, L, spec)));
                      }
                      return worst;
                    }));

  const Profile phi = profiles::gaussian(0.5);  // F_lambda phi(0) = 1
  rep.add(run_check("T12", "approximate identity", "||f*phi_eps - f||_2 shrinks from eps = 0.5 to 0.05 (ratio reported)",
                    1.0, [&](std::string& note) {
                      double worst = 0;
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        const double at0 = std::abs(dunkl_transform(phi, L, 0.0, spec) - 1.0);
                        if (at0 > 1e-8) throw DomainError("F phi(0) != 1");
                        const Profile f = profiles::gaussian(1.0, 0.4);
                        const double coarse = approximate_identity_error(phi, f, 0.5, 2.0, L, spec);
                        const double fine = approximate_identity_error(phi, f, 0.05, 2.0, L, spec);
                        worst = std::max(worst, fine / coarse);
                        note += "lambda " + fmt(l) + ": " + fmt(coarse) + " -> " + fmt(fine) + "; ";
                      }
                      return worst;
                    }));

  rep.add(run_check("T13", "dilation and self-convolution",
                    "||phi_eps||_1 = ||phi||_1; eps = 1 error matches the closed-form self-convolution", 1e-8,
                    [&](std::string&) {
                      double worst = 0;
                      for (double l : {0.5, 1.5}) {
                        WeightedLine L(l);
                        const double base = detail::norm(phi, 1.0, L, spec);
                        for (double eps : {0.1, 1.0, 10.0})
                          worst = std::max(worst, std::abs(detail::norm(dilate(phi, eps, L), 1.0, L, spec) / base - 1.0));
                        // phi * phi = 2^{-lambda-1/2} e^{-x^2/4}
                        const double k = std::pow(2.0, -l - 0.5);
                        Profile diff([k](double x) { return cplx(k * std::exp(-x * x / 4) - std::exp(-x * x / 2)); },
                                     Parity::even, std::sqrt(2.0), "phi*phi - phi");
                        const double want = detail::norm(diff, 2.0, L, spec);
                        worst = std::max(worst, std::abs(approximate_identity_error(phi, phi, 1.0, 2.0, L, spec) / want - 1.0));
                      }
                      return worst;
                    }));

  return rep;
}

}  // namespace dunkl::verify
