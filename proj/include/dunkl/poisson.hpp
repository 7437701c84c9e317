#pragma once

#include <algorithm>
#include <cmath>
#include <array>
#include <complex>
#include <numbers>
#include <vector>

#include "dunkl.hpp"
#include "errors.hpp"
#include "line.hpp"
#include "quadrature.hpp"

namespace dunkl {

inline double poisson_closed(const WeightedLine& line, double x, double y) {
  return line.m() * y * std::pow(y * y + x * x, -line.lambda() - 1.0);
}

inline double conjugate_closed(const WeightedLine& line, double x, double y) {
  return line.m() * x * std::pow(y * y + x * x, -line.lambda() - 1.0);
}

enum class KernelKind { P, Q };

inline Profile poisson_profile(const WeightedLine& line, double y) {
  if (!(y > 0)) throw DomainError("Poisson kernel needs y > 0");
  Profile p([line, y](double x) { return cplx(poisson_closed(line, x, y)); }, Parity::even, kInf,
            "P_" + std::to_string(y));
  p.length_scale = y;
  p.derivative = [line, y](double x) {
    const double l = line.lambda();
    return cplx(-2.0 * (l + 1.0) * line.m() * y * x * std::pow(y * y + x * x, -l - 2.0));
  };
  return p;
}

inline Profile conjugate_profile(const WeightedLine& line, double y) {
  if (!(y > 0)) throw DomainError("conjugate kernel needs y > 0");
  Profile p([line, y](double x) { return cplx(conjugate_closed(line, x, y)); }, Parity::odd, kInf,
            "Q_" + std::to_string(y));
  p.length_scale = y;
  p.derivative = [line, y](double x) {
    const double l = line.lambda();
    const double d = y * y + x * x;
    return cplx(line.m() * (std::pow(d, -l - 1.0) - 2.0 * (l + 1.0) * x * x * std::pow(d, -l - 2.0)));
  };
  return p;
}

// int_{-1}^1 g(s) (1-s^2)^{lambda-1} ds for g peaked at s = 1 with relative
// width w. Narrow peaks get panels that double in length away from s = 1.
template <class G>
auto peaked_theta_integral(G&& g, double lambda, double w, int order) {
  using T = decltype(g(0.0));
  if (w >= 0.5) return jacobi_rule(lambda - 1.0, lambda - 1.0, order)->sum(g);
  constexpr int kPanelOrder = 20;
  const double a = lambda - 1.0;
  T total = jacobi_rule(a, 0.0, kPanelOrder)->integrate_on(1.0 - w, 1.0, [&](double s) {
    return g(s) * std::pow(1.0 + s, a);
  });
  const auto& gl = legendre_rule(kPanelOrder);
  double d = w;
  while (d < 0.5) {
    const double hi = 1.0 - d, lo = 1.0 - 2.0 * d;
    total += gl.integrate_on(lo, hi, [&](double s) { return g(s) * std::pow((1.0 - s) * (1.0 + s), a); });
    d *= 2.0;
  }
  total += jacobi_rule(0.0, a, kPanelOrder)->integrate_on(-1.0, 1.0 - d, [&](double s) {
    return g(s) * std::pow(1.0 - s, a);
  });
  return total;
}

namespace detail {

// lambda Gamma(lambda+1/2) 2^{lambda+1/2} / pi
inline double kernel_constant(const WeightedLine& line) {
  const double l = line.lambda();
  return l * std::tgamma(l + 0.5) * std::pow(2.0, l + 0.5) / std::numbers::pi;
}

inline double peak_width(double x, double y, double t) {
  const double xt = std::abs(x * t);
  const double gap = std::abs(x) - std::abs(t);
  return (y * y + gap * gap) / (2.0 * xt);
}

}  // namespace detail

// (tau_x P_y)(-t) as the theta integral
//   K int y (1 + sgn(xt) s) (y^2 + x^2 + t^2 - 2|xt| s)^{-lambda-1} (1-s^2)^{lambda-1} ds.
inline double poisson_kernel(const WeightedLine& line, double x, double y, double t, const QuadratureSpec& spec) {
  if (!(y > 0)) throw DomainError("Poisson kernel needs y > 0");
  if (t == 0.0) return poisson_closed(line, x, y);
  if (x == 0.0) return poisson_closed(line, t, y);
  const double l = line.lambda(), sg = (x * t > 0) ? 1.0 : -1.0, xt = std::abs(x * t);
  const double base = y * y + x * x + t * t;
  auto g = [&](double s) { return y * (1.0 + sg * s) * std::pow(base - 2.0 * xt * s, -l - 1.0); };
  return detail::kernel_constant(line) * peaked_theta_integral(g, l, detail::peak_width(x, y, t), spec.jacobi_order);
}

// (tau_x Q_y)(-t): same integral with (x - t) in place of y.
inline double conjugate_kernel(const WeightedLine& line, double x, double y, double t, const QuadratureSpec& spec) {
  if (!(y > 0)) throw DomainError("conjugate kernel needs y > 0");
  if (t == 0.0) return conjugate_closed(line, x, y);
  if (x == 0.0) return conjugate_closed(line, -t, y);
  const double l = line.lambda(), sg = (x * t > 0) ? 1.0 : -1.0, xt = std::abs(x * t);
  const double base = y * y + x * x + t * t;
  auto g = [&](double s) { return (x - t) * (1.0 + sg * s) * std::pow(base - 2.0 * xt * s, -l - 1.0); };
  return detail::kernel_constant(line) * peaked_theta_integral(g, l, detail::peak_width(x, y, t), spec.jacobi_order);
}

struct PoissonKernelPoint {
  WeightedLine line;
  double x, y, t;
  double value_P, value_Q;
};

inline PoissonKernelPoint poisson_kernel_point(const WeightedLine& line, double x, double y, double t,
                                               const QuadratureSpec& spec) {
  return {line, x, y, t, poisson_kernel(line, x, y, t, spec), conjugate_kernel(line, x, y, t, spec)};
}

// Small fixed vector so the rules can integrate several partials at once.
struct Vec5 {
  std::array<double, 5> v{};
  Vec5& operator+=(const Vec5& o) {
    for (int i = 0; i < 5; ++i) v[i] += o.v[i];
    return *this;
  }
  friend Vec5 operator*(double a, Vec5 b) {
    for (double& e : b.v) e *= a;
    return b;
  }
  friend Vec5 operator*(Vec5 b, double a) { return a * b; }
};

struct KernelDerivatives {
  double value = 0, dx = 0, dy = 0, dxx = 0, dyy = 0;
};

// Value and x, y partials of either kernel, differentiated under the integral.
// x = 0 is approached from the right; the kernel is smooth there.
inline KernelDerivatives kernel_derivatives(const WeightedLine& line, KernelKind kind, double x, double y, double t,
                                            const QuadratureSpec& spec) {
  if (!(y > 0)) throw DomainError("kernel needs y > 0");
  if (std::abs(x) < 1e-9) x = 1e-9;
  const double l = line.lambda();
  const double at = std::abs(t), sx = x > 0 ? 1.0 : -1.0;
  const double sg = t == 0.0 ? 0.0 : sx * (t > 0 ? 1.0 : -1.0);
  const double base = y * y + x * x + t * t;
  const bool is_p = kind == KernelKind::P;
  const double u = x - t;
  auto g = [&](double s) {
    const double d = base - 2.0 * std::abs(x) * at * s;
    const double dx = 2.0 * x - 2.0 * sx * at * s;
    const double w = 1.0 + sg * s;
    const double d1 = std::pow(d, -l - 1.0), d2 = d1 / d, d3 = d2 / d;
    Vec5 out;
    auto& r = out.v;
    if (is_p) {
      r[0] = y * w * d1;
      r[1] = -(l + 1.0) * y * w * d2 * dx;
      r[2] = w * (d1 - 2.0 * (l + 1.0) * y * y * d2);
      r[3] = -(l + 1.0) * y * w * (2.0 * d2 - (l + 2.0) * d3 * dx * dx);
      r[4] = (l + 1.0) * w * (-6.0 * y * d2 + 4.0 * (l + 2.0) * y * y * y * d3);
    } else {
      r[0] = u * w * d1;
      r[1] = w * (d1 - (l + 1.0) * u * d2 * dx);
      r[2] = -2.0 * (l + 1.0) * u * y * w * d2;
      r[3] = (l + 1.0) * w * (-2.0 * d2 * dx + (l + 2.0) * u * d3 * dx * dx - 2.0 * u * d2);
      r[4] = -(l + 1.0) * u * w * (2.0 * d2 - 4.0 * (l + 2.0) * y * y * d3);
    }
    return out;
  };
  Vec5 v;
  if (t == 0.0) {
    // sigma = 0 and no peak: plain rule, constant factor B(1/2, lambda).
    v = jacobi_rule(l - 1.0, l - 1.0, spec.jacobi_order)->sum(g);
  } else {
    v = peaked_theta_integral(g, l, detail::peak_width(x, y, t), spec.jacobi_order);
  }
  const double k = detail::kernel_constant(line);
  return {k * v.v[0], k * v.v[1], k * v.v[2], k * v.v[3], k * v.v[4]};
}

namespace detail {

inline HalflineShape kernel_integral_shape(const Profile& f, double x, double y) {
  HalflineShape s = f.shape();
  const double ax = std::abs(x);
  for (double k : {-8.0, -2.0, -0.5, 0.0, 0.5, 2.0, 8.0}) {
    const double b = ax + k * y;
    if (b > 0) s.breakpoints.push_back(b);
  }
  if (!std::isfinite(f.support) && s.exponential) s.scale = std::max(s.scale, ax / 10.0);
  return s;
}

}  // namespace detail

// c_lambda int f(t) K(x,y,t) |t|^{2lambda} dt with K the P or Q kernel.
inline cplx kernel_integral(KernelKind kind, const Profile& f, double x, double y, const WeightedLine& line,
                            const QuadratureSpec& spec) {
  if (!(y > 0)) throw DomainError("Poisson integral needs y > 0");
  auto integrand = [&](double t) {
    const cplx ft = f(t);
    if (ft == 0.0) return cplx{};
    return ft * (kind == KernelKind::P ? poisson_kernel(line, x, y, t, spec) : conjugate_kernel(line, x, y, t, spec));
  };
  auto r = integrate_weighted(integrand, line.lambda(), Parity::none, detail::kernel_integral_shape(f, x, y), spec);
  return line.c() * r.value;
}

inline cplx poisson_integral(const Profile& f, double x, double y, const WeightedLine& line,
                             const QuadratureSpec& spec) {
  return kernel_integral(KernelKind::P, f, x, y, line, spec);
}

inline cplx conjugate_integral(const Profile& f, double x, double y, const WeightedLine& line,
                               const QuadratureSpec& spec) {
  return kernel_integral(KernelKind::Q, f, x, y, line, spec);
}

// Value and partials of the P or Q integral of f, by differentiating the kernel.
inline std::array<cplx, 5> kernel_integral_derivatives(KernelKind kind, const Profile& f, double x, double y,
                                                       const WeightedLine& line, const QuadratureSpec& spec) {
  std::array<cplx, 5> out;
  for (int k = 0; k < 5; ++k) {
    auto integrand = [&](double t) {
      const cplx ft = f(t);
      if (ft == 0.0) return cplx{};
      const auto d = kernel_derivatives(line, kind, x, y, t, spec);
      const double parts[5] = {d.value, d.dx, d.dy, d.dxx, d.dyy};
      return ft * parts[k];
    };
    out[k] = line.c() *
             integrate_weighted(integrand, line.lambda(), Parity::none, detail::kernel_integral_shape(f, x, y), spec)
                 .value;
  }
  return out;
}

// c_lambda int m(xi) e^{-y|xi|} hat(xi) E(i x xi) |xi|^{2lambda} dxi with
// m = 1 (Poisson) or -i sgn(xi) (conjugate). `hat` is the transform of f.
template <class H>
cplx spectral_kernel_integral(KernelKind kind, H&& hat, double hat_scale, double x, double y,
                              const WeightedLine& line, const QuadratureSpec& spec) {
  if (!(y > 0)) throw DomainError("spectral Poisson needs y > 0");
  auto integrand = [&](double xi) {
    const double damp = std::exp(-y * std::abs(xi));
    cplx v = damp * cplx(hat(xi)) * line.kernel(x * xi);
    if (kind == KernelKind::Q) v *= cplx(0, xi > 0 ? -1.0 : (xi < 0 ? 1.0 : 0.0));
    return v;
  };
  HalflineShape shape;
  shape.scale = std::min(1.0 / y, hat_scale);
  auto r = integrate_weighted(integrand, line.lambda(), Parity::none, shape, spec);
  return line.c() * r.value;
}

// Spectral route: the transform of f is itself computed by quadrature.
inline cplx spectral_poisson(const Profile& f, double x, double y, const WeightedLine& line,
                             const QuadratureSpec& spec) {
  auto hat = [&](double xi) { return dunkl_transform(f, line, xi, spec); };
  return spectral_kernel_integral(KernelKind::P, hat, 1.0 / f.scale(), x, y, line, spec);
}

struct DerivativeGrid {
  std::vector<double> xs, ys, zs;
};

inline DerivativeGrid default_derivative_grid() {
  DerivativeGrid g;
  for (int i = 0; i < 7; ++i) g.ys.push_back(std::pow(10.0, -2.0 + 3.0 * i / 6.0));
  for (int i = 0; i < 10; ++i) g.xs.push_back(-8.0 + 16.0 * i / 9.0);
  g.zs = g.xs;
  return g;
}

enum class DerivativeOrder { first_x, first_y, second };

// max over the grid of |derivative| * (y^2 + (|x|-|z|)^2)^e, e = lambda+1 for
// first derivatives and lambda+3/2 for second (largest of xx and yy).
inline double kernel_derivative_ratio(const WeightedLine& line, KernelKind kind, DerivativeOrder order,
                                      const DerivativeGrid& grid, const QuadratureSpec& spec) {
  const double e = order == DerivativeOrder::second ? line.lambda() + 1.5 : line.lambda() + 1.0;
  double worst = 0;
  for (double y : grid.ys)
    for (double x : grid.xs)
      for (double z : grid.zs) {
        const double gap = std::abs(x) - std::abs(z);
        if (std::abs(gap) <= 1e-3 * y) continue;
        const auto d = kernel_derivatives(line, kind, x, y, z, spec);
        double v = 0;
        switch (order) {
          case DerivativeOrder::first_x: v = std::abs(d.dx); break;
          case DerivativeOrder::first_y: v = std::abs(d.dy); break;
          case DerivativeOrder::second: v = std::max(std::abs(d.dxx), std::abs(d.dyy)); break;
        }
        worst = std::max(worst, v * std::pow(y * y + gap * gap, e));
      }
  return worst;
}

}  // namespace dunkl
