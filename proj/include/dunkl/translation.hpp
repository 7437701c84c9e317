#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "dunkl.hpp"
#include "errors.hpp"
#include "line.hpp"
#include "quadrature.hpp"

namespace dunkl {

// Integral form of tau_t f(x): with s = cos(theta) and
// r = sqrt(x^2 + t^2 + 2xts),
//   c'_lambda int [f_e(r) + f_o(r)(x+t)/r] (1-s)^{lambda-1} (1+s)^lambda ds.
class ThetaForm {
 public:
  ThetaForm(const WeightedLine& line, int order)
      : lambda_(line.lambda()), cp_(line.c_prime()), rule_(jacobi_rule(line.lambda() - 1.0, line.lambda(), order)) {}

  const JacobiRule& rule() const { return *rule_; }

  // fe, fo: even and odd parts; odd_slope0 = f_o'(0), used only if r hits 0.
  template <class FE, class FO>
  cplx apply(FE&& fe, FO&& fo, double t, double x, cplx odd_slope0 = 0.0) const {
    const double floor = 1e-13 * (std::abs(x) + std::abs(t));
    cplx acc{};
    const auto& s = rule_->nodes();
    const auto& w = rule_->weights();
    for (size_t i = 0; i < s.size(); ++i) {
      const double r = std::sqrt(std::max(0.0, x * x + t * t + 2.0 * x * t * s[i]));
      cplx v = fe(r);
      if (r > floor)
        v += cplx(fo(r)) * ((x + t) / r);
      else
        v += odd_slope0 * (x + t);
      acc += w[i] * v;
    }
    return cp_ * acc;
  }

  // Same integral for profiles vanishing beyond |r| = support. Only the
  // s-range with r <= support contributes, and it is split into panels so the
  // edge of the support never sits inside one global rule.
  template <class FE, class FO>
  cplx apply_supported(FE&& fe, FO&& fo, double t, double x, double support, cplx odd_slope0 = 0.0) const {
    const double xt = x * t;
    if (!std::isfinite(support) || xt == 0.0 || std::abs(x) + std::abs(t) <= support)
      return apply(fe, fo, t, x, odd_slope0);
    const double edge = (support * support - x * x - t * t) / (2.0 * xt);
    // r grows with s when xt > 0
    const double lo = xt > 0 ? -1.0 : std::max(-1.0, edge), hi = xt > 0 ? std::min(1.0, edge) : 1.0;
    if (!(hi > lo)) return 0.0;
    const double floor = 1e-13 * (std::abs(x) + std::abs(t));
    auto h = [&](double s) {
      const double r = std::sqrt(std::max(0.0, x * x + t * t + 2.0 * xt * s));
      cplx v = fe(r);
      v += r > floor ? cplx(fo(r)) * ((x + t) / r) : odd_slope0 * (x + t);
      return v;
    };
    const double a = lambda_ - 1.0, b = lambda_;
    const int n = std::max(8, rule_->order() / 2);
    const double width = (hi - lo) / kSupportPanels;
    cplx acc{};
    for (int k = 0; k < kSupportPanels; ++k) {
      const double p = lo + k * width, q = k + 1 == kSupportPanels ? hi : p + width;
      if (p == -1.0)
        acc += jacobi_rule(0.0, b, n)->integrate_on(p, q, [&](double s) { return h(s) * std::pow(1.0 - s, a); });
      else if (q == 1.0)
        acc += jacobi_rule(a, 0.0, n)->integrate_on(p, q, [&](double s) { return h(s) * std::pow(1.0 + s, b); });
      else
        acc += legendre_rule(n).integrate_on(p, q, [&](double s) {
          return h(s) * std::pow(1.0 - s, a) * std::pow(1.0 + s, b);
        });
    }
    return cp_ * acc;
  }

 private:
  static constexpr int kSupportPanels = 8;
  double lambda_;
  double cp_;
  std::shared_ptr<const JacobiRule> rule_;
};

inline cplx odd_slope_at_zero(const Profile& f) {
  if (f.parity == Parity::even) return 0.0;
  if (f.derivative) return f.derivative(0.0);
  return richardson_derivative(f.f, 0.0, fd_step(0.0));
}

// (tau_t f)(x).
inline cplx translate(const Profile& f, double t, double x, const WeightedLine& line, const QuadratureSpec& spec) {
  if (t == 0.0) return f(x);
  if (x == 0.0) return f(t);
  ThetaForm form(line, spec.jacobi_order);
  return form.apply_supported([&](double r) { return f.even(r); }, [&](double r) { return f.odd(r); }, t, x,
                              f.support, odd_slope_at_zero(f));
}

// The translation kernel W(x,t,z); (tau_t f)(x) = c_lambda int f(z) W(x,t,z) |z|^{2lambda} dz.
class TranslationKernel {
 public:
  TranslationKernel(const WeightedLine& line, double x, double t) : line_(line), x_(x), t_(t) {
    if (x == 0.0 || t == 0.0) throw DomainError("translation kernel needs x, t != 0");
  }

  double lower() const { return std::abs(std::abs(x_) - std::abs(t_)); }
  double upper() const { return std::abs(x_) + std::abs(t_); }

  // Signed infinity at the edges of the support when lambda < 1.
  double operator()(double z) const {
    const double az = std::abs(z), a = lower(), b = upper();
    if (az < a || az > b || z == 0.0) return 0.0;
    const double l = line_.lambda();
    const double factor = 1.0 - sigma(x_, t_, z) + sigma(z, x_, t_) + sigma(z, t_, x_);
    const double gap = (b * b - z * z) * (z * z - a * a);
    if (gap <= 0.0) {
      if (l > 1.0) return 0.0;
      if (l == 1.0) return line_.c_dprime() * std::pow(std::abs(x_ * t_ * z), 1.0 - 2.0 * l) * factor;
      return factor == 0.0 ? 0.0 : std::copysign(kInf, factor);
    }
    return line_.c_dprime() * std::pow(std::abs(x_ * t_ * z), 1.0 - 2.0 * l) / std::pow(gap, 1.0 - l) * factor;
  }

  static double sigma(double x, double t, double z) {
    const double d = 2.0 * x * t;
    return d == 0.0 ? 0.0 : (x * x + t * t - z * z) / d;
  }

  // c_lambda int g(z) W(x,t,z) |z|^{2lambda} dz via z^2 = x^2 + t^2 + 2|xt|s,
  // which turns the measure into (1-s^2)^{lambda-1} ds.
  template <class G>
  cplx integrate(G&& g, int order) const {
    const double l = line_.lambda();
    const auto& rule = *jacobi_rule(l - 1.0, l - 1.0, order);
    const double k = line_.c() * line_.c_dprime() * std::pow(2.0, 2.0 * l - 2.0);
    const double xt = std::abs(x_ * t_);
    return k * rule.sum([&](double s) {
      const double z = std::sqrt(x_ * x_ + t_ * t_ + 2.0 * xt * s);
      const double common = 1.0 - sigma(x_, t_, z);
      const double flip = sigma(z, x_, t_) + sigma(z, t_, x_);
      return cplx(g(z)) * (common + flip) + cplx(g(-z)) * (common - flip);
    });
  }

 private:
  WeightedLine line_;
  double x_, t_;
};

inline double w_kernel(const WeightedLine& line, double x, double t, double z) {
  return TranslationKernel(line, x, t)(z);
}

// Oracle route for tau_t f(x) through W.
inline cplx translate_zform(const Profile& f, double t, double x, const WeightedLine& line,
                            const QuadratureSpec& spec) {
  if (t == 0.0) return f(x);
  if (x == 0.0) return f(t);
  return TranslationKernel(line, x, t).integrate(f.f, spec.jacobi_order);
}

// |tau_t E(i . xi)(x) - E(i x xi) E(i t xi)|
inline double product_formula_residual(const WeightedLine& line, double x, double t, double xi,
                                       const QuadratureSpec& spec) {
  ThetaForm form(line, spec.jacobi_order);
  auto j = [&](double r) { return line.table().eval<2>(r * xi); };
  const double k = xi / (2.0 * line.lambda() + 1.0);
  cplx lhs = form.apply([&](double r) { return cplx(j(r)[0]); }, [&](double r) { return cplx(0, k * r * j(r)[1]); },
                        t, x, cplx(0, k));
  if (t == 0.0) lhs = line.kernel(x * xi);
  if (x == 0.0) lhs = line.kernel(t * xi);
  return std::abs(lhs - line.kernel(x * xi) * line.kernel(t * xi));
}

// x -> (tau_t f)(x) as a profile.
inline Profile translated_profile(const Profile& f, double t, const WeightedLine& line, const QuadratureSpec& spec) {
  Profile p;
  p.f = [f, t, line, spec](double x) { return translate(f, t, x, line, spec); };
  p.parity = Parity::none;
  p.decay_scale = f.decay_scale;
  p.length_scale = f.length_scale;
  if (std::isfinite(f.decay_scale)) p.decay_scale = f.decay_scale + std::abs(t) / spec.truncation_radius_factor;
  if (std::isfinite(f.support)) p.support = f.support + std::abs(t);
  p.description = "tau_" + std::to_string(t) + " " + f.description;
  return p;
}

namespace detail {

inline HalflineShape convolution_shape(const Profile& f, const Profile& g, double x) {
  HalflineShape s = g.shape();
  if (!std::isfinite(g.support) && std::isfinite(f.support)) {
    s.support = std::abs(x) + f.support;
    s.scale = f.length_scale;
  }
  if (std::isfinite(f.support)) {
    s.breakpoints.push_back(std::abs(std::abs(x) - f.support));
    s.breakpoints.push_back(std::abs(x) + f.support);
  }
  if (s.exponential && std::isfinite(f.decay_scale))
    s.scale = std::max(s.scale, std::abs(x) / 4.0 + std::max(f.decay_scale, g.decay_scale));
  return s;
}

}  // namespace detail

// (f * g)(x) = c_lambda int (tau_x f)(-t) g(t) |t|^{2lambda} dt.
inline cplx convolve(const Profile& f, const Profile& g, double x, const WeightedLine& line,
                     const QuadratureSpec& spec) {
  ThetaForm form(line, spec.jacobi_order);
  const cplx slope = odd_slope_at_zero(f);
  auto integrand = [&](double t) {
    const cplx gt = g(t);
    if (gt == 0.0) return cplx{};
    cplx tau = (x == 0.0) ? f(-t)
               : (t == 0.0)
                   ? f(x)
                   : form.apply_supported([&](double r) { return f.even(r); }, [&](double r) { return f.odd(r); }, x,
                                          -t, f.support, slope);
    return tau * gt;
  };
  auto r = integrate_weighted(integrand, line.lambda(), Parity::none, detail::convolution_shape(f, g, x), spec);
  return line.c() * r.value;
}

inline Profile convolution_profile(const Profile& f, const Profile& g, const WeightedLine& line,
                                   const QuadratureSpec& spec) {
  Profile p;
  p.f = [f, g, line, spec](double x) { return convolve(f, g, x, line, spec); };
  p.parity = (f.parity == Parity::even && g.parity == Parity::even) ? Parity::even : Parity::none;
  if (std::isfinite(f.decay_scale) && std::isfinite(g.decay_scale))
    p.decay_scale = std::hypot(f.decay_scale, g.decay_scale);
  p.length_scale = f.scale() + g.scale();
  if (std::isfinite(f.support) && std::isfinite(g.support)) p.support = f.support + g.support;
  p.description = "(" + f.description + ")*(" + g.description + ")";
  return p;
}

// phi_eps(x) = eps^{-2lambda-1} phi(x/eps)
inline Profile dilate(const Profile& phi, double eps, const WeightedLine& line) {
  const double k = std::pow(eps, -2.0 * line.lambda() - 1.0);
  Profile p;
  p.f = [phi, eps, k](double x) { return k * phi(x / eps); };
  p.parity = phi.parity;
  p.decay_scale = phi.decay_scale * eps;
  p.length_scale = phi.length_scale * eps;
  p.support = phi.support * eps;
  if (phi.derivative) p.derivative = [phi, eps, k](double x) { return k / eps * phi.derivative(x / eps); };
  p.description = phi.description + " dilated by " + std::to_string(eps);
  return p;
}

// || f * phi_eps - f ||_p
inline double approximate_identity_error(const Profile& phi, const Profile& f, double eps, double p,
                                         const WeightedLine& line, const QuadratureSpec& spec) {
  const Profile conv = convolution_profile(f, dilate(phi, eps, line), line, spec);
  Profile diff;
  diff.f = [conv, f](double x) { return conv(x) - f(x); };
  diff.parity = conv.parity;
  diff.decay_scale = f.decay_scale;
  diff.length_scale = f.length_scale;
  diff.support = conv.support;
  return lp_quasinorm(diff, NormSpec::of(p), line, spec);
}

}  // namespace dunkl
