#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "../dunkl.hpp"
#include "../errors.hpp"
#include "../hardy.hpp"
#include "../poisson.hpp"
#include "../translation.hpp"
#include "sweep.hpp"

// Flat CSV tables for plotting and spot checks. Numbers use %.17g.
namespace dunkl::verify {

// "start:stop:count", endpoints included; count 1 gives just start.
inline std::vector<double> parse_grid(const std::string& text) {
  const auto a = text.find(':'), b = text.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) throw DomainError("grid must look like start:stop:count, got '" + text + "'");
  double lo = 0, hi = 0;
  long n = 0;
  try {
    size_t used = 0;
    lo = std::stod(text.substr(0, a));
    hi = std::stod(text.substr(a + 1, b - a - 1));
    n = std::stol(text.substr(b + 1), &used);
    if (used != text.size() - b - 1) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw DomainError("grid must look like start:stop:count, got '" + text + "'");
  }
  if (n < 1 || n > 1000000) throw DomainError("grid count must be between 1 and 1e6");
  std::vector<double> g;
  for (long i = 0; i < n; ++i) g.push_back(n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1));
  return g;
}

// E_lambda(iz) from the Bessel route, with its gap to the integral route.
inline void write_kernel_csv(std::ostream& out, double lambda, const std::vector<double>& zs, const QuadratureSpec& spec) {
  const WeightedLine line(lambda);
  out << "lambda,z_or_xi,re,im,abs_err_vs_alt_representation\n";
  for (double z : zs) {
    const cplx e = dunkl_kernel_series(line, z);
    const double err = std::abs(e - dunkl_kernel_integral(line, z, spec));
    out << format_double(lambda) << ',' << format_double(z) << ',' << format_double(e.real()) << ','
        << format_double(e.imag()) << ',' << format_double(err) << '\n';
  }
}

inline void write_w_csv(std::ostream& out, double lambda, double x, double t, const std::vector<double>& zs) {
  const TranslationKernel W(WeightedLine(lambda), x, t);
  out << "lambda,x,t,z,W\n";
  for (double z : zs)
    out << format_double(lambda) << ',' << format_double(x) << ',' << format_double(t) << ',' << format_double(z) << ','
        << format_double(W(z)) << '\n';
}

// (tau_x P_y)(-t) and (tau_x Q_y)(-t) along a grid of x.
inline void write_poisson_csv(std::ostream& out, double lambda, double y, double t, const std::vector<double>& xs,
                              const QuadratureSpec& spec) {
  const WeightedLine line(lambda);
  out << "lambda,x,y,t,P,Q\n";
  for (double x : xs)
    out << format_double(lambda) << ',' << format_double(x) << ',' << format_double(y) << ',' << format_double(t) << ','
        << format_double(poisson_kernel(line, x, y, t, spec)) << ','
        << format_double(conjugate_kernel(line, x, y, t, spec)) << '\n';
}

inline void write_field_csv(std::ostream& out, const HalfPlaneField& F, const std::vector<double>& xs,
                            const std::vector<double>& ys) {
  out << "x,y,re_u,im_v\n";
  for (double y : ys)
    for (double x : xs) {
      const cplx v = F(x, y);
      out << format_double(x) << ',' << format_double(y) << ',' << format_double(v.real()) << ',' << format_double(v.imag())
          << '\n';
    }
}

}  // namespace dunkl::verify
