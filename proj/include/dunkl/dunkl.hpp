#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "line.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace dunkl {

// E_lambda(iz) through normalized Bessel functions. This is the reference
// path; WeightedLine::kernel is the tabulated copy used inside quadratures.
inline cplx dunkl_kernel_series(const WeightedLine& line, cplx z) {
  const double l = line.lambda();
  return bessel_norm(l - 0.5, z) + cplx(0, 1) * z / (2.0 * l + 1.0) * bessel_norm(l + 0.5, z);
}

// E_lambda(iz) = c'_lambda int e^{izt} (1+t)(1-t^2)^{lambda-1} dt.
inline cplx dunkl_kernel_integral(const WeightedLine& line, double z, const QuadratureSpec& spec) {
  const double l = line.lambda();
  const int n = std::max(spec.jacobi_order, static_cast<int>(std::ceil(std::abs(z))) + 32);
  const auto& rule = *jacobi_rule(l - 1.0, l - 1.0, n);
  return line.c_prime() * rule.sum([&](double t) { return std::exp(cplx(0, z * t)) * (1.0 + t); });
}

namespace classical {
// lambda = 0: the Fourier kernel and the ordinary Poisson pair.
inline cplx kernel(double z) { return std::exp(cplx(0, z)); }
inline double poisson(double x, double y) { return y / (std::numbers::pi * (x * x + y * y)); }
inline double conjugate(double x, double y) { return x / (std::numbers::pi * (x * x + y * y)); }
}  // namespace classical

// Central difference with one Richardson step.
template <class F>
auto richardson_derivative(F&& f, double x, double h) {
  auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

inline double fd_step(double x) { return 1e-5 * std::max(1.0, std::abs(x)); }

// D f(x) = f'(x) + lambda (f(x) - f(-x)) / x, given f and its derivative.
// Near the origin the difference quotient is replaced by its limit.
template <class F, class DF>
auto dunkl_derivative_of(F&& f, DF&& df, double x, double lambda) {
  if (std::abs(x) < 1e-8) {
    auto even_slope = 0.5 * (df(x) - df(-x));
    auto odd_slope0 = df(0.0);
    return even_slope + (2.0 * lambda + 1.0) * odd_slope0;
  }
  return df(x) + lambda / x * (f(x) - f(-x));
}

inline cplx dunkl_derivative(const Profile& f, double x, const WeightedLine& line) {
  std::function<cplx(double)> df = f.derivative;
  if (!df) df = [&](double u) { return richardson_derivative(f.f, u, fd_step(u)); };
  return dunkl_derivative_of(f.f, df, x, line.lambda());
}

// F_lambda f(xi) = c_lambda int f(x) E_lambda(-i x xi) |x|^{2 lambda} dx, split
// into the even part against j_{lambda-1/2} and the odd part against j_{lambda+1/2}.
inline cplx dunkl_transform(const Profile& f, const WeightedLine& line, double xi, const QuadratureSpec& spec) {
  const double l = line.lambda();
  const double s = 2.0 * l;
  const auto& tab = line.table();
  auto even = [&](double x) { return f.even(x) * tab.eval<1>(x * xi)[0]; };
  auto odd = [&](double x) { return f.odd(x) * x * tab.eval<2>(x * xi)[1]; };
  auto integrate = [&](auto&& g) -> cplx {
    const HalflineShape shape = f.shape();
    if (shape.exponential || std::isfinite(shape.support) || xi == 0.0)
      return integrate_zero_to_inf(g, s, shape, spec).value;
    const double radius = spec.truncation_radius_factor * shape.scale;
    HalflineShape inner = shape;
    inner.support = radius;
    auto main = integrate_zero_to_inf(g, s, inner, spec);
    auto weighted = [&](double x) { return std::pow(x, s) * g(x); };
    auto tail = integrate_oscillatory_tail(weighted, radius, std::numbers::pi / std::abs(xi), spec,
                                           std::max(std::abs(main.value), 1e-3 * main.mass));
    return main.value + tail.value;
  };
  cplx out{};
  if (f.parity != Parity::odd) out += integrate(even);
  if (f.parity != Parity::even && xi != 0.0) out -= cplx(0, xi / (2.0 * l + 1.0)) * integrate(odd);
  return 2.0 * line.c() * out;
}

namespace detail {

// sup |f| on [-half, half]: a 401-point grid, then golden-section search
// between the neighbours of the three largest grid maxima.
inline double grid_supremum(const Profile& f, double half) {
  constexpr int n = 401;
  std::vector<double> xs(n), vs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = -half + 2.0 * half * i / (n - 1);
    vs[i] = std::abs(f(xs[i]));
  }
  std::vector<int> peaks;
  for (int i = 0; i < n; ++i)
    if ((i == 0 || vs[i] >= vs[i - 1]) && (i == n - 1 || vs[i] >= vs[i + 1])) peaks.push_back(i);
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return vs[a] > vs[b]; });
  double m = *std::max_element(vs.begin(), vs.end());
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (size_t k = 0; k < std::min<size_t>(3, peaks.size()); ++k) {
    const int i = peaks[k];
    double a = xs[std::max(0, i - 1)], b = xs[std::min(n - 1, i + 1)];
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = std::abs(f(c)), fd = std::abs(f(d));
    for (int it = 0; it < 30; ++it) {
      if (fc > fd) {
        b = d, d = c, fd = fc, c = b - g * (b - a), fc = std::abs(f(c));
      } else {
        a = c, c = d, fc = fd, d = a + g * (b - a), fd = std::abs(f(d));
      }
    }
    m = std::max({m, fc, fd});
  }
  return m;
}

}  // namespace detail

// (c_lambda int |f|^p |x|^{2 lambda} dx)^{1/p}; p = inf is a refined grid supremum.
inline double lp_quasinorm(const Profile& f, const NormSpec& norm, const WeightedLine& line,
                           const QuadratureSpec& spec) {
  if (!(norm.p > 0)) throw DomainError("p must be positive");
  if (std::isinf(norm.p)) return detail::grid_supremum(f, std::min(norm.grid_halfwidth, f.support));
  const Parity par = f.parity == Parity::none ? Parity::none : Parity::even;
  auto r = integrate_weighted([&](double x) { return std::pow(std::abs(f(x)), norm.p); }, line.lambda(), par,
                              f.shape(), spec);
  return std::pow(line.c() * r.value.real(), 1.0 / norm.p);
}

// |sum a_k|^p <= sum |a_k|^p for 0 < p <= 1. Returns both sides.
inline std::pair<double, double> p_subadditivity(std::span<const double> a, double p) {
  if (!(p > 0) || p > 1) throw DomainError("p-subadditivity needs 0 < p <= 1");
  double s = 0, rhs = 0;
  for (double v : a) {
    s += v;
    rhs += std::pow(std::abs(v), p);
  }
  return {std::pow(std::abs(s), p), rhs};
}

}  // namespace dunkl
