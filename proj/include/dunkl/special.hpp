#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"

namespace dunkl {

namespace detail {

inline constexpr double kSeriesRadius = 3.0;
inline constexpr double kHankelRadius = 25.0;
inline constexpr double kComplexSeriesRadius = 30.0;

// Gamma(a+1) sum (-1)^n (z/2)^{2n} / (n! Gamma(n+a+1)), stopped on term ratio.
template <class T>
std::complex<T> normalized_bessel_series(T alpha, std::complex<T> z) {
  const std::complex<T> q = -z * z / T(4);
  std::complex<T> term = 1, sum = 1;
  for (int n = 1; n < 400; ++n) {
    term *= q / (T(n) * (T(n) + alpha));
    sum += term;
    if (std::abs(term) <= T(1e-18) * std::abs(sum) && T(n) * T(n) > std::abs(q)) break;
  }
  return sum;
}

// Hankel expansion of J_nu(z), Re z > 0.
template <class T>
T hankel_bessel_j(double nu, T z) {
  const double mu = 4.0 * nu * nu;
  T t = 1.0, p = 1.0, q = 0.0;
  double last = kInf;
  for (int k = 1; k < 200; ++k) {
    t *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * z);
    const double mag = std::abs(t);
    if (mag > last) break;  // asymptotic series turned around
    last = mag;
    switch (k % 4) {
      case 1: q += t; break;
      case 2: p -= t; break;
      case 3: q -= t; break;
      default: p += t; break;
    }
    if (mag < 1e-17) break;
  }
  const T chi = z - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

// J_nu(x) for x > 0 and nu > -1. libstdc++ wants nu >= 0, so negative orders
// come down from nu+1 and nu+2.
inline double bessel_j_real(double nu, double x) {
  if (nu >= 0) return std::cyl_bessel_j(nu, x);
  return 2.0 * (nu + 1.0) / x * std::cyl_bessel_j(nu + 1.0, x) - std::cyl_bessel_j(nu + 2.0, x);
}

}  // namespace detail

// j_alpha(z) = Gamma(alpha+1) (2/z)^alpha J_alpha(z), real argument.
inline double bessel_norm(double alpha, double z) {
  if (!(alpha > -1.0)) throw DomainError("bessel_norm needs alpha > -1");
  const double x = std::abs(z);
  if (x <= detail::kSeriesRadius) return detail::normalized_bessel_series<double>(alpha, x).real();
  const double scale = std::exp(alpha * std::numbers::ln2 + std::lgamma(alpha + 1.0) - alpha * std::log(x));
  if (x >= detail::kHankelRadius) return scale * detail::hankel_bessel_j(alpha, x);
  return scale * detail::bessel_j_real(alpha, x);
}

inline cplx bessel_norm(double alpha, cplx z) {
  if (!(alpha > -1.0)) throw DomainError("bessel_norm needs alpha > -1");
  if (z.imag() == 0.0) return bessel_norm(alpha, z.real());
  if (z.real() < 0) z = -z;  // even in z
  if (std::abs(z) <= detail::kComplexSeriesRadius) {
    auto s = detail::normalized_bessel_series<long double>(alpha, std::complex<long double>(z.real(), z.imag()));
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
  }
  const cplx scale = std::exp(alpha * std::numbers::ln2 + std::lgamma(alpha + 1.0) - alpha * std::log(z));
  return scale * detail::hankel_bessel_j<cplx>(alpha, z);
}

// Piecewise Chebyshev fit of j_{lambda-1/2}, j_{lambda+1/2}, j_{lambda+3/2} on
// [0, 256]. The fit is built once from bessel_norm and only replaces it where
// the same values would be recomputed millions of times.
class KernelTable {
 public:
  static constexpr double kWidth = 1.0;
  static constexpr int kPanels = 256;
  static constexpr int kDegree = 14;
  static constexpr double kReach = kWidth * kPanels;

  explicit KernelTable(double lambda) : lambda_(lambda), c_(static_cast<size_t>(kPanels) * 3 * kDegree) {
    std::array<double, kDegree> u;
    for (int j = 0; j < kDegree; ++j) u[j] = std::cos(std::numbers::pi * (j + 0.5) / kDegree);
    for (int p = 0; p < kPanels; ++p) {
      for (int f = 0; f < 3; ++f) {
        const double alpha = lambda - 0.5 + f;
        std::array<double, kDegree> v;
        for (int j = 0; j < kDegree; ++j) v[j] = bessel_norm(alpha, kWidth * (p + 0.5 * (1.0 + u[j])));
        double* c = &c_[(static_cast<size_t>(p) * 3 + f) * kDegree];
        for (int m = 0; m < kDegree; ++m) {
          double acc = 0;
          for (int j = 0; j < kDegree; ++j) acc += v[j] * std::cos(std::numbers::pi * m * (j + 0.5) / kDegree);
          c[m] = 2.0 * acc / kDegree;
        }
        c[0] *= 0.5;
      }
    }
  }

  double lambda() const { return lambda_; }

  // First `count` of j_{lambda-1/2}, j_{lambda+1/2}, j_{lambda+3/2} at z.
  template <int count = 2>
  std::array<double, count> eval(double z) const {
    const double x = std::abs(z);
    std::array<double, count> out;
    if (x >= kReach) {
      for (int f = 0; f < count; ++f) out[f] = bessel_norm(lambda_ - 0.5 + f, x);
      return out;
    }
    const int p = static_cast<int>(x / kWidth);
    const double u = 2.0 * (x / kWidth - p) - 1.0;
    for (int f = 0; f < count; ++f) {
      const double* c = &c_[(static_cast<size_t>(p) * 3 + f) * kDegree];
      double b1 = 0, b2 = 0;
      for (int m = kDegree - 1; m >= 1; --m) {
        const double b0 = 2.0 * u * b1 - b2 + c[m];
        b2 = b1;
        b1 = b0;
      }
      out[f] = u * b1 - b2 + c[0];
    }
    return out;
  }

 private:
  double lambda_;
  std::vector<double> c_;
};

}  // namespace dunkl
