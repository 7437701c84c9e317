#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "../hardy.hpp"
#include "../poisson.hpp"
#include "common.hpp"

namespace dunkl::verify {

namespace detail {

// Same values, partials by differences only: an independent route to the residuals.
inline HalfPlaneField values_only(HalfPlaneField F) {
  F.jet = nullptr;
  F.jet_order = 0;
  return F;
}

struct NamedField {
  std::string name;
  HalfPlaneField field;
};

inline std::vector<NamedField> analytic_corpus(const WeightedLine& L, const QuadratureSpec& spec) {
  std::vector<NamedField> out;
  for (int m : {0, 1, 2}) {
    out.push_back({"cauchy m=" + std::to_string(m), cauchy_field(L, 1.0, m)});
    out.push_back({"spectral m=" + std::to_string(m), spectral_field(SpectralDensity::power_exponential(m, 1.0), L, spec)});
  }
  for (auto k : {HomogeneousKind::P, HomogeneousKind::Q, HomogeneousKind::PQ})
    out.push_back({std::string("homogeneous ") + homogeneous_name(k), homogeneous_kernel_field(L, k)});
  return out;
}

// sup_y ||F(., y)||_2 for F with density xi^m e^{-y0 xi}, by Plancherel:
// ||F(., y)||_2^2 = c_lambda Gamma(2m + 2 lambda + 1) / (2 (y + y0))^{2m + 2 lambda + 1}.
inline double h2_section_oracle(const WeightedLine& L, int m, double y0, double y) {
  const double a = 2.0 * m + 2.0 * L.lambda() + 1.0;
  return std::sqrt(L.c() * std::tgamma(a) / std::pow(2.0 * (y + y0), a));
}

}  // namespace detail

inline VerificationReport hardy_suite(const SuiteConfig& cfg) {
  const QuadratureSpec& spec = cfg.spec;
  VerificationReport rep;
  rep.suite = "hardy";
  rep.seed = cfg.seed;
  rep.quadrature = spec;
  const std::vector<double> lambdas = {0.3, 0.5, 1.0};
  const HalfPlaneGrid grid = standard_grid();

  rep.add(run_check("H1", "generalized Cauchy-Riemann", "D_x u = v_y, u_y = -D_x v on the 9 x 5 grid", 1e-5,
                    [&](std::string& note) {
                      double worst = 0;
                      std::string who;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (const auto& [name, F] : detail::analytic_corpus(L, spec)) {
                          // P and Q alone are harmonic but not analytic; only P + iQ pairs them
                          if (name == "homogeneous P" || name == "homogeneous Q") continue;
                          for (const HalfPlaneField& G : {F, detail::values_only(F)}) {
                            const double r = cr_residual(G, grid);
                            if (r > worst) {
                              worst = r;
                              who = name + " at lambda " + fmt(l);
                            }
                          }
                        }
                      }
                      note = "largest: " + who + "; analytic and difference partials";
                      return worst;
                    }));

  rep.add(run_check("H2", "lambda-harmonicity", "Delta_lambda u = Delta_lambda v = 0 on the grid", 1e-4,
                    [&](std::string& note) {
                      double worst = 0;
                      std::string who;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (const auto& [name, F] : detail::analytic_corpus(L, spec)) {
                          if (F.family == FieldFamily::spectral) {
                            // analytic first partials, second by differences of them
                            const double r = harmonicity_residual(F, grid);
                            if (r > worst) worst = r, who = name + " at lambda " + fmt(l);
                            continue;
                          }
                          for (const HalfPlaneField& G : {F, detail::values_only(F)}) {
                            const double r = harmonicity_residual(G, grid);
                            if (r > worst) worst = r, who = name + " at lambda " + fmt(l);
                          }
                        }
                      }
                      note = "largest: " + who;
                      return worst;
                    }));

  rep.add(run_check("H3", "residual canary", "u = v = P is not lambda-analytic: CR residual stays large", 1e-2,
                    [&](std::string&) {
                      double least = kInf;
                      for (double l : lambdas) least = std::min(least, cr_residual(broken_field(WeightedLine(l)), grid));
                      return least;
                    },
                    Compare::above));

  rep.add(run_check("H4", "swap and scaling", "(u, v) -> (-v, u) and F -> cF keep the residual at zero", 1e-5,
                    [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        const HalfPlaneField F = cauchy_field(L, 1.0, 1);
                        worst = std::max(worst, cr_residual(conjugate_swap(F), grid));
                        worst = std::max(worst, cr_residual(scaled_field(F, cplx(-2.5, 0.7)), grid) / std::abs(cplx(-2.5, 0.7)));
                        worst = std::max(worst, harmonicity_residual(conjugate_swap(F), grid));
                      }
                      return worst;
                    }));

  rep.add(run_check("H5", "kernel homogeneity", "F(x/t, y/t) = t^{2 lambda + 1} F(x, y) for P, Q, P + iQ", 1e-9,
                    [&](std::string& note) {
                      double worst = 0, half = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (auto k : {HomogeneousKind::P, HomogeneousKind::Q, HomogeneousKind::PQ}) {
                          const HalfPlaneField F = homogeneous_kernel_field(L, k);
                          HalfPlaneGrid g = grid;
                          g.xs.erase(std::remove(g.xs.begin(), g.xs.end(), 0.0), g.xs.end());  // Q vanishes at x = 0
                          worst = std::max(worst, homogeneity_gap(F, g));
                          half = std::max(half, homogeneity_gap(F, g, {0.5}));
                        }
                      }
                      note = "t = 1/2 alone: " + fmt(half) + " (tolerance 1e-12)";
                      return half <= 1e-12 ? worst : kInf;
                    }));

  rep.add(run_check("H6", "analytic partials", "jets vs Richardson differences at 64 seeded points", 1e-6, [&](std::string&) {
    Sampler s(cfg.seed, 61);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 64; ++i) pts.emplace_back(s.nonzero(-3, 3, 0.05), s.uniform(0.2, 3.0));
    double worst = 0;
    for (double l : lambdas) {
      WeightedLine L(l);
      for (const auto& [name, F] : detail::analytic_corpus(L, spec)) {
        if (F.family == FieldFamily::spectral) continue;  // too slow for 64 points; covered by H7
        worst = std::max(worst, partials_gap(F, pts));
      }
    }
    return worst;
  }));

  rep.add(run_check("H7", "spectral fields", "m = 0 field = (P + iQ)_{y+y0}/2; xi e^{-xi} field = -d/dy of it; quadrature = closed form",
                    1e-6, [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        const HalfPlaneField F0 = spectral_field(SpectralDensity::power_exponential(0, 1.0), L, spec);
                        const HalfPlaneField F1 = spectral_field(SpectralDensity::power_exponential(1, 1.0), L, spec);
                        const HalfPlaneField F2 = spectral_field(SpectralDensity::power_exponential(2, 1.0), L, spec);
                        const HalfPlaneField C2 = cauchy_field(L, 1.0, 2);
                        auto half_pq = [&](double x, double Y) {
                          return 0.5 * cplx(poisson_closed(L, x, Y), conjugate_closed(L, x, Y));
                        };
                        for (double x : {-2.0, -0.4, 0.0, 0.9, 3.0})
                          for (double y : {0.1, 0.5, 2.0}) {
                            worst = std::max(worst, mixed_gap(F0(x, y), half_pq(x, y + 1.0)));
                            const cplx d = -richardson_derivative([&](double s) { return half_pq(x, s); }, y + 1.0, 1e-3);
                            worst = std::max(worst, mixed_gap(F1(x, y), d));
                            worst = std::max(worst, mixed_gap(F2(x, y), C2(x, y)));
                          }
                      }
                      return worst;
                    }));

  rep.add(run_check("H8", "admission", "fields outside H^p are rejected before any norm is computed", 0,
                    [&](std::string& note) {
                      int wrong = 0;
                      struct Case {
                        double lambda, p;
                        int m;  // -1: homogeneous P
                        bool expect;
                      };
                      const std::vector<Case> cases = {
                          {0.5, 0.5, -1, false},  // p at 2 lambda/(2 lambda+1)
                          {0.5, 0.6, -1, false},  // sections decay like |x|^{-3}: needs p > 2/3
                          {0.5, 0.7, -1, true},   {1.0, 0.7, -1, false}, {1.0, 0.8, -1, true},
                          {0.5, 1.0, 0, false},   // decay |x|^{-2}: not integrable at p = 1
                          {0.5, 1.1, 0, true},    {0.5, 0.75, 1, true},  {0.5, 0.6, 1, false},
                          {0.3, 0.6, 2, true},    {0.3, 0.3, 2, false},
                      };
                      for (const auto& c : cases) {
                        WeightedLine L(c.lambda);
                        const HalfPlaneField F = c.m < 0 ? homogeneous_kernel_field(L, HomogeneousKind::P) : cauchy_field(L, 1.0, c.m);
                        bool thrown = false;
                        try {
                          require_admitted(F, c.p);
                        } catch (const DomainError&) {
                          thrown = true;
                        }
                        if (admits(F, c.p) != c.expect || thrown == c.expect || (thrown != admission_reason(F, c.p).size() > 0)) ++wrong;
                      }
                      note = std::to_string(cases.size()) + " cases, " + std::to_string(wrong) + " wrong";
                      return double(wrong);
                    }));

  rep.add(run_check("H9", "H^2 norm by Plancherel", "section norms of xi^m e^{-xi} fields vs c Gamma(2m+2lambda+1)/(2(y+1))^{..}",
                    1e-4, [&](std::string&) {
                      double worst = 0;
                      for (double l : lambdas) {
                        WeightedLine L(l);
                        for (int m : {1, 2}) {
                          const HalfPlaneField F = cauchy_field(L, 1.0, m);
                          const NormReport r = hardy_quasinorm(F, 2.0, spec);
                          // sections decrease, so the sup sits at the smallest grid y
                          worst = std::max(worst, rel_gap(r.value, detail::h2_section_oracle(L, m, 1.0, r.argmax_y)));
                          for (double y : {0.01, 1.0, 10.0})
                            worst = std::max(worst, rel_gap(section_norm(F, y, 2.0, spec), detail::h2_section_oracle(L, m, 1.0, y)));
                        }
                      }
                      return worst;
                    }));

  rep.add(run_check("H10", "quasinorm scaling", "||cF|| = |c| ||F||; dilation F(x/t, y/t) scales by t^{(2lambda+1)/p}", 1e-8,
                    [&](std::string&) {
                      double worst = 0;
                      const std::vector<double> g = log_grid(1e-2, 1e1, 8);
                      for (double l : {0.5, 1.0}) {
                        WeightedLine L(l);
                        const HalfPlaneField F = cauchy_field(L, 1.0, 1);
                        for (double p : {0.9, 2.0}) {
                          const double base = hardy_quasinorm(F, p, spec, g).value;
                          const cplx c(3.0, -4.0);
                          worst = std::max(worst, rel_gap(hardy_quasinorm(scaled_field(F, c), p, spec, g).value, 5.0 * base));
                          const double t = 2.0;
                          HalfPlaneField D = F;
                          D.value = [F, t](double x, double y) { return F(x / t, y / t); };
                          D.jet = nullptr;
                          D.shift = F.shift * t;
                          std::vector<double> gt;
                          for (double y : g) gt.push_back(y * t);
                          worst = std::max(worst, rel_gap(hardy_quasinorm(D, p, spec, gt).value,
                                                          std::pow(t, (2.0 * l + 1.0) / p) * base));
                        }
                      }
                      return worst;
                    }));

  rep.add(run_check("H11", "monotone sections", "y -> ||F(., y)||_p is non-increasing for p >= 1 (largest relative rise)", 1e-9,
                    [&](std::string&) {
                      double rise = 0;
                      for (double l : {0.5, 1.0}) {
                        WeightedLine L(l);
                        for (int m : {1, 2})
                          for (double p : {1.0, 2.0}) {
                            const HalfPlaneField F = cauchy_field(L, 1.0, m);
                            double prev = kInf;
                            for (double y : log_grid(1e-3, 1e2, 12)) {
                              const double v = section_norm(F, y, p, spec);
                              if (std::isfinite(prev)) rise = std::max(rise, (v - prev) / prev);
                              prev = v;
                            }
                          }
                      }
                      return rise;
                    }));

  rep.add(run_check("H12", "grid refinement", "refining the y grid moves the H^p quasinorm by less than 1%", 1e-2,
                    [&](std::string&) {
                      double worst = 0;
                      for (double l : {0.3, 1.0}) {
                        WeightedLine L(l);
                        for (int m : {1, 2})
                          for (double p : {0.9, 1.5}) {
                            const HalfPlaneField F = cauchy_field(L, 1.0, m);
                            if (!admits(F, p)) continue;
                            const auto g = default_y_grid();
                            worst = std::max(worst, rel_gap(hardy_quasinorm(F, p, spec, refine_grid(g)).value,
                                                            hardy_quasinorm(F, p, spec, g).value));
                          }
                      }
                      return worst;
                    }));

  rep.add(run_check("H13", "boundary recovery", "P[F(., 0.01)](x, y) = F(x, y + 0.01)", 1e-4, [&](std::string&) {
    double worst = 0;
    const std::vector<std::pair<double, double>> pts = {{0.0, 0.5}, {-1.2, 0.3}, {2.0, 1.0}};
    for (double l : {0.5, 1.0}) {
      WeightedLine L(l);
      worst = std::max(worst, boundary_recovery_gap(cauchy_field(L, 1.0, 1), 0.01, pts, spec));
      worst = std::max(worst, boundary_recovery_gap(homogeneous_kernel_field(L, HomogeneousKind::PQ), 0.5, pts, spec));
    }
    return worst;
  }));

  return rep;
}

}  // namespace dunkl::verify
