#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "line.hpp"

namespace dunkl::profiles {

// e^{-a (x-b)^2}
inline Profile gaussian(double a = 0.5, double b = 0.0) {
  if (!(a > 0)) throw DomainError("gaussian needs a > 0");
  Profile p([a, b](double x) { return cplx(std::exp(-a * (x - b) * (x - b))); },
            b == 0.0 ? Parity::even : Parity::none, 1.0 / std::sqrt(2.0 * a),
            "exp(-" + std::to_string(a) + "(x-" + std::to_string(b) + ")^2)");
  p.derivative = [a, b](double x) { return cplx(-2.0 * a * (x - b) * std::exp(-a * (x - b) * (x - b))); };
  return p;
}

// x e^{-a x^2}
inline Profile odd_gaussian(double a = 0.5) {
  Profile p([a](double x) { return cplx(x * std::exp(-a * x * x)); }, Parity::odd, 1.0 / std::sqrt(2.0 * a),
            "x exp(-" + std::to_string(a) + "x^2)");
  p.derivative = [a](double x) { return cplx((1.0 - 2.0 * a * x * x) * std::exp(-a * x * x)); };
  return p;
}

// Smooth bump exp(-1/(1-u^2)), u = (x-c)/r, supported in [c-r, c+r].
inline Profile bump(double center, double radius) {
  if (!(radius > 0)) throw DomainError("bump needs a positive radius");
  auto f = [center, radius](double x) {
    const double u = (x - center) / radius;
    return std::abs(u) < 1.0 ? cplx(std::exp(-1.0 / (1.0 - u * u))) : cplx(0.0);
  };
  Profile p(f, center == 0.0 ? Parity::even : Parity::none, kInf,
            "bump(" + std::to_string(center) + "," + std::to_string(radius) + ")");
  p.support = std::abs(center) + radius;
  p.length_scale = radius;
  p.derivative = [center, radius](double x) {
    const double u = (x - center) / radius;
    if (std::abs(u) >= 1.0) return cplx(0.0);
    const double q = 1.0 - u * u;
    return cplx(-2.0 * u / (radius * q * q) * std::exp(-1.0 / q));
  };
  return p;
}

// Even bump supported on r1 <= |x| <= r2.
inline Profile annulus_bump(double r1, double r2) {
  if (!(r2 > r1) || r1 < 0) throw DomainError("annulus needs 0 <= r1 < r2");
  const double c = 0.5 * (r1 + r2), r = 0.5 * (r2 - r1);
  Profile inner = bump(c, r);
  Profile p([inner](double x) { return inner(std::abs(x)); }, Parity::even, kInf,
            "annulus(" + std::to_string(r1) + "," + std::to_string(r2) + ")");
  p.support = r2;
  p.length_scale = r;
  p.derivative = [inner](double x) { return (x < 0 ? -1.0 : 1.0) * inner.derivative(std::abs(x)); };
  return p;
}

inline Profile constant(double value = 1.0) {
  Profile p([value](double) { return cplx(value); }, Parity::even, kInf, "constant");
  p.derivative = [](double) { return cplx(0.0); };
  return p;
}

// x -> E_lambda(i x xi).
inline Profile kernel(const WeightedLine& line, double xi) {
  Profile p([line, xi](double x) { return line.kernel(x * xi); }, Parity::none, kInf,
            "E(i x " + std::to_string(xi) + ")");
  p.derivative = [line, xi](double x) { return xi * line.kernel_derivative(x * xi); };
  return p;
}

}  // namespace dunkl::profiles
