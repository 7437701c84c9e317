#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace dunkl {

// The real line with measure |x|^{2 lambda} dx and the constants that go with it.
class WeightedLine {
 public:
  explicit WeightedLine(double lambda) : lambda_(lambda) {
    if (!(lambda > 0) || !std::isfinite(lambda))
      throw DomainError("lambda must be positive (lambda = 0 is the classical reference mode)");
    const double g = std::tgamma(lambda + 0.5);
    const double sqrtpi = std::sqrt(std::numbers::pi);
    c_ = 1.0 / (std::pow(2.0, lambda + 0.5) * g);
    c1_ = g / (std::tgamma(lambda) * sqrtpi);
    c2_ = std::pow(2.0, 1.5 - lambda) * g * g / (sqrtpi * std::tgamma(lambda));
    m_ = std::pow(2.0, lambda + 0.5) * std::tgamma(lambda + 1.0) / sqrtpi;
    table_ = lazy_table(lambda);
  }

  double lambda() const { return lambda_; }
  double c() const { return c_; }         // c_lambda
  double c_prime() const { return c1_; }  // c'_lambda
  double c_dprime() const { return c2_; } // c''_lambda
  double m() const { return m_; }         // m_lambda

  const KernelTable& table() const {
    std::call_once(table_->once, [this] { table_->table = std::make_unique<KernelTable>(lambda_); });
    return *table_->table;
  }

  // E_lambda(i z) for real z.
  cplx kernel(double z) const {
    auto j = table().eval<2>(z);
    return {j[0], z / (2.0 * lambda_ + 1.0) * j[1]};
  }

  // d/dz E_lambda(i z) for real z.
  cplx kernel_derivative(double z) const {
    auto j = table().eval<3>(z);
    const double k = 2.0 * lambda_ + 1.0;
    return {-z * j[1] / k, (j[1] - z * z * j[2] / (2.0 * lambda_ + 3.0)) / k};
  }

 private:
  struct LazyTable {
    std::once_flag once;
    std::unique_ptr<KernelTable> table;
  };

  static std::shared_ptr<LazyTable> lazy_table(double lambda) {
    static std::mutex mu;
    static std::map<double, std::shared_ptr<LazyTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[lambda];
    if (!slot) slot = std::make_shared<LazyTable>();
    return slot;
  }

  double lambda_, c_, c1_, c2_, m_;
  std::shared_ptr<LazyTable> table_;
};

enum class Parity { even, odd, none };

inline const char* parity_name(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "none";
  }
}

// A function on the line plus what the integrators need to know about it.
struct Profile {
  std::function<cplx(double)> f;
  Parity parity = Parity::none;
  double decay_scale = kInf;  // Gaussian or exponential decay length; infinite means algebraic
  std::string description;
  double length_scale = 1.0;  // where the mass sits when decay is algebraic
  double support = kInf;      // vanishes for |x| > support
  std::function<cplx(double)> derivative;

  Profile() = default;
  Profile(std::function<cplx(double)> fn, Parity p, double decay, std::string desc)
      : f(std::move(fn)), parity(p), decay_scale(decay), description(std::move(desc)) {
    if (!(decay_scale > 0)) throw DomainError("decay scale must be positive");
    check_parity();
  }

  cplx operator()(double x) const { return f(x); }
  cplx even(double x) const {
    if (parity == Parity::even) return f(x);
    if (parity == Parity::odd) return 0.0;
    return 0.5 * (f(x) + f(-x));
  }
  cplx odd(double x) const {
    if (parity == Parity::odd) return f(x);
    if (parity == Parity::even) return 0.0;
    return 0.5 * (f(x) - f(-x));
  }

  double scale() const { return std::isfinite(decay_scale) ? decay_scale : length_scale; }

  HalflineShape shape() const {
    HalflineShape s;
    s.scale = scale();
    s.exponential = std::isfinite(decay_scale);
    s.support = support;
    return s;
  }

  void check_parity() const {
    if (parity == Parity::none) return;
    const double sign = parity == Parity::even ? 1.0 : -1.0;
    for (int k = 0; k < 32; ++k) {
      const double x = (0.05 + 0.37 * k) * scale();
      const cplx a = f(x), b = f(-x);
      if (std::abs(b - sign * a) > 1e-12 * std::max(1.0, std::abs(a)))
        throw DomainError("profile '" + description + "' is not " + parity_name(parity));
    }
  }
};

// int f(x) |x|^{2 lambda} dx for a callable with the given parity and shape.
template <class F>
IntegralEstimate integrate_weighted(F&& f, double lambda, Parity parity, const HalflineShape& shape,
                                    const QuadratureSpec& spec) {
  if (parity == Parity::odd) return {};
  if (parity == Parity::even) {
    auto r = integrate_zero_to_inf([&](double x) { return cplx(f(x)); }, 2.0 * lambda, shape, spec);
    return {2.0 * r.value, 2.0 * r.error, 2.0 * r.mass, r.evaluations};
  }
  return integrate_zero_to_inf([&](double x) { return cplx(f(x)) + cplx(f(-x)); }, 2.0 * lambda, shape, spec);
}

inline cplx integrate_weighted_line(const Profile& f, const WeightedLine& line, const QuadratureSpec& spec) {
  return integrate_weighted(f.f, line.lambda(), f.parity, f.shape(), spec).value;
}

inline cplx integrate_halfline(const Profile& f, const QuadratureSpec& spec) {
  return integrate_zero_to_inf(f.f, 0.0, f.shape(), spec).value;
}

struct NormSpec {
  double p = 2.0;
  double grid_halfwidth = 20.0;  // only used for p = inf
  double conjugate_q = 2.0;

  static NormSpec of(double p) {
    if (!(p > 0)) throw DomainError("p must be positive");
    NormSpec n;
    n.p = p;
    n.conjugate_q = p > 1 ? (std::isfinite(p) ? p / (p - 1.0) : 1.0) : kInf;
    return n;
  }
};

}  // namespace dunkl
