#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hardy.hpp"
#include "line.hpp"
#include "quadrature.hpp"

namespace dunkl {

// phi_alpha(t) = alpha (1-t)^{alpha-1} on (0,1).
class CesaroWeight {
 public:
  explicit CesaroWeight(double alpha) : alpha_(alpha) {
    if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  }

  double alpha() const { return alpha_; }
  double phi(double t) const { return alpha_ * std::pow(1.0 - t, alpha_ - 1.0); }

  // Jacobi rule carrying (1-t)^{alpha-1}, to be mapped onto [1/2, 1].
  std::shared_ptr<const JacobiRule> rule(int order) const { return jacobi_rule(alpha_ - 1.0, 0.0, order); }

  // int_lo^hi phi_alpha, written to avoid cancellation near t = 0.
  double mass(double lo, double hi) const {
    return std::expm1(alpha_ * std::log1p(-lo)) - std::expm1(alpha_ * std::log1p(-hi));
  }

 private:
  double alpha_;
};

inline constexpr int kMaxDimension = 3;

// Up to N + 1 = 4 components.
struct Components {
  std::array<double, kMaxDimension + 1> v{};
  Components& operator+=(const Components& o) {
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  friend Components operator*(double a, Components c) {
    for (double& e : c.v) e *= a;
    return c;
  }
  friend Components operator*(Components c, double a) { return a * c; }
  double modulus() const {
    double s = 0;
    for (double e : v) s += e * e;
    return std::sqrt(s);
  }
};

namespace detail {

inline constexpr int kGradedPanels = 40;
inline constexpr int kMinGradedPanels = 8;

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(cplx v) { return std::abs(v); }
inline double magnitude(const FieldJet& j) {
  return std::abs(j.f) + std::abs(j.dx) + std::abs(j.dy) + std::abs(j.dxx) + std::abs(j.dyy);
}
inline double magnitude(const Components& c) { return c.modulus(); }

}  // namespace detail

// int_0^1 g(t) phi_alpha(t) dt. The Jacobi rule takes [1/2, 1]; (0, 1/2] is cut
// into panels [2^{-k-1}, 2^{-k}] with Gauss-Legendre on each, stopping once two
// panels in a row are negligible. A panel sum that is still significant after
// 40 halvings means the integrand is not integrable at 0.
template <class G>
auto cesaro_average(G&& g, const CesaroWeight& w, const QuadratureSpec& spec) {
  using T = decltype(g(1.0));
  T total = w.alpha() * w.rule(spec.jacobi_order)->integrate_on(0.5, 1.0, g);
  const auto& gl = legendre_rule(10);
  double hi = 0.5;
  int quiet = 0;
  double last = 0;
  for (int k = 0; k < detail::kGradedPanels; ++k) {
    const double lo = 0.5 * hi;
    const T piece = gl.integrate_on(lo, hi, [&](double t) { return w.phi(t) * g(t); });
    total += piece;
    last = detail::magnitude(piece);
    quiet = last <= 1e-16 * detail::magnitude(total) ? quiet + 1 : 0;
    if (k + 1 >= detail::kMinGradedPanels && quiet >= 2) return total;
    hi = lo;
  }
  if (last > 1e-8 * detail::magnitude(total))
    throw DivergenceError("Cesaro integrand not integrable at t = 0: last panel contributes " + std::to_string(last));
  return total;
}

// (C_alpha F)(x, y) = int_0^1 t^{-1} F(x/t, y/t) phi_alpha(t) dt
inline cplx cesaro_scalar(const HalfPlaneField& F, const CesaroWeight& w, double x, double y,
                          const QuadratureSpec& spec) {
  if (!(y > 0)) throw DomainError("Cesaro operator needs y > 0");
  return cesaro_average([&](double t) { return F(x / t, y / t) / t; }, w, spec);
}

// C_alpha F as a field. Partials pass under the integral: each x or y
// derivative brings one more factor 1/t.
inline HalfPlaneField cesaro_field(const HalfPlaneField& F, const CesaroWeight& w, const QuadratureSpec& spec) {
  HalfPlaneField C = F;
  C.value = [F, w, spec](double x, double y) { return cesaro_scalar(F, w, x, y, spec); };
  if (F.jet) {
    C.jet = [F, w, spec](double x, double y) {
      if (!(y > 0)) throw DomainError("Cesaro operator needs y > 0");
      return cesaro_average(
          [&](double t) {
            const FieldJet j = F.jet(x / t, y / t);
            const double i1 = 1.0 / t, i2 = i1 * i1, i3 = i2 * i1;
            return FieldJet{i1 * j.f, i2 * j.dx, i2 * j.dy, i3 * j.dxx, i3 * j.dyy};
          },
          w, spec);
    };
  }
  C.family = FieldFamily::custom;
  C.description = "C_" + std::to_string(w.alpha()) + "[" + F.description + "]";
  return C;
}

// B_alpha phi(xi) = int_0^1 phi(t xi) phi_alpha(t) t^{2 lambda} dt
inline cplx cesaro_multiplier(const SpectralDensity& phi, const CesaroWeight& w, const WeightedLine& line, double xi,
                              const QuadratureSpec& spec) {
  if (!(xi >= 0)) throw DomainError("multiplier is defined for xi >= 0");
  const auto rule = jacobi_rule(w.alpha() - 1.0, 2.0 * line.lambda(), spec.jacobi_order);
  return w.alpha() * rule->integrate_on(0.0, 1.0, [&](double t) { return phi.phi(t * xi); });
}

inline SpectralDensity multiplier_density(const SpectralDensity& phi, const CesaroWeight& w, const WeightedLine& line,
                                          const QuadratureSpec& spec) {
  SpectralDensity d = phi;
  d.phi = [phi, w, line, spec](double xi) { return cesaro_multiplier(phi, w, line, xi, spec); };
  d.description = "B_" + std::to_string(w.alpha()) + "[" + phi.description + "]";
  return d;
}

// ---- bound constants ----

// N, lambda_1..lambda_N and beta = N + sum 2 lambda_i.
struct ProductWeight {
  int N = 1;
  std::vector<double> lambdas;
  double beta = 0;

  explicit ProductWeight(std::vector<double> ls) : N(static_cast<int>(ls.size())), lambdas(std::move(ls)) {
    beta = compute_beta();
    validate();
  }

  double compute_beta() const { return N + 2.0 * std::accumulate(lambdas.begin(), lambdas.end(), 0.0); }

  void validate() const {
    if (N < 1) throw DomainError("product weight needs N >= 1");
    for (double l : lambdas)
      if (!(l > 0)) throw DomainError("product weight needs every lambda_i > 0");
    if (beta != compute_beta()) throw DomainError("beta does not match the lambdas");
  }
};

enum class BoundKind { exact_beta, series_flagged, none };

inline const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::exact_beta: return "exact_beta";
    case BoundKind::series_flagged: return "series_flagged";
    default: return "none";
  }
}

struct BoundReport {
  double value = 0;
  BoundKind kind = BoundKind::none;
  bool prefactor_unspecified = false;
  std::string note;
};

// p >= 1: alpha B(beta/p, alpha), from Minkowski and homogeneity.
// p < 1: the dyadic series 1/(2^beta - 1) + 1/(2^{p alpha} - 1); the absolute
// constant in front of it is not known, so the value is flagged.
inline BoundReport lp_bound_constant(double p, double alpha, double beta) {
  if (!(p > 0) || !(alpha > 0)) throw DomainError("bound needs p > 0 and alpha > 0");
  BoundReport r;
  if (p >= 1.0) {
    r.value = alpha * std::beta(beta / p, alpha);
    r.kind = BoundKind::exact_beta;
    return r;
  }
  r.value = 1.0 / (std::exp2(beta) - 1.0) + 1.0 / (std::exp2(p * alpha) - 1.0);
  r.kind = BoundKind::series_flagged;
  r.prefactor_unspecified = true;
  r.note = "absolute prefactor C unspecified by the source; series factor only";
  return r;
}

inline BoundReport lp_bound_constant(double p, double alpha, const ProductWeight& weight) {
  return lp_bound_constant(p, alpha, weight.beta);
}

// ---- dyadic majorant ----

namespace detail {

// sup of |h| over 8 Chebyshev-Lobatto points of [lo, hi].
template <class H>
double block_sup(H&& h, double lo, double hi) {
  double s = 0;
  for (int i = 0; i < 8; ++i) {
    const double c = std::cos(std::numbers::pi * i / 7.0);
    s = std::max(s, std::abs(h(0.5 * (lo + hi) + 0.5 * (hi - lo) * c)));
  }
  return s;
}

inline constexpr int kMaxBlocks = 50;

}  // namespace detail

// sum_k sup_{[2^{k-1},2^k]} |t^{-1} F(x/t,y/t)|^p (int_block phi_alpha)^p
//   + sum_k sup_{[1-2^k,1-2^{k-1}]} |F(x/t,y/t)|^p (int_block t^{-1} phi_alpha)^p,
// k <= -1. Block sups replace the mean-value points, which only enlarges the
// right side. The second weight is the exact block integral; 2^{k alpha} alone
// can fall short of it by the factor 2(1 - 2^{-alpha}) when alpha > 1.
inline double dyadic_majorant(const HalfPlaneField& F, const CesaroWeight& w, double p, double x, double y) {
  if (!(p > 0) || p > 1) throw DomainError("dyadic majorant needs 0 < p <= 1");
  if (!(y > 0)) throw DomainError("dyadic majorant needs y > 0");
  const double a = w.alpha();
  const auto& gl = legendre_rule(20);
  auto scaled = [&](double t) { return std::abs(F(x / t, y / t)); };
  double head = 0, body = 0;
  for (int k = -1; k >= -detail::kMaxBlocks; --k) {
    const double lo = std::ldexp(1.0, k - 1), hi = std::ldexp(1.0, k);
    const double sup = detail::block_sup([&](double t) { return scaled(t) / t; }, lo, hi);
    const double term = std::pow(sup * w.mass(lo, hi), p);
    head += term;
    if (k <= -detail::kMinGradedPanels && term < 1e-14 * head) break;
  }
  for (int k = -1; k >= -detail::kMaxBlocks; --k) {
    const double ulo = std::ldexp(1.0, k - 1), uhi = std::ldexp(1.0, k);  // u = 1 - t
    const double weight = gl.integrate_on(ulo, uhi, [&](double u) { return a * std::pow(u, a - 1.0) / (1.0 - u); });
    const double sup = detail::block_sup([&](double u) { return scaled(1.0 - u); }, ulo, uhi);
    const double term = std::pow(sup * weight, p);
    body += term;
    if (k <= -detail::kMinGradedPanels && term < 1e-14 * body) break;
  }
  return head + body;
}

// ---- operator ratio ----

struct RatioReport {
  double ratio = kInf;
  NormReport norm_f, norm_cf;
  double cr_f = 0, cr_cf = 0;
  bool diverged = false;
  std::string message;
};

// ||C_alpha F||_{H^p} / ||F||_{H^p}. Divergence is reported, not thrown.
inline RatioReport operator_ratio(const HalfPlaneField& F, const CesaroWeight& w, double p, const QuadratureSpec& spec,
                                  const std::vector<double>& y_grid = default_y_grid(), bool measure_cr = true) {
  require_admitted(F, p);
  RatioReport r;
  const HalfPlaneField C = cesaro_field(F, w, spec);
  try {
    r.norm_f = hardy_quasinorm(F, p, spec, y_grid);
    r.norm_cf = hardy_quasinorm(C, p, spec, y_grid);
    r.ratio = r.norm_cf.value / r.norm_f.value;
    if (measure_cr) {
      const HalfPlaneGrid g = standard_grid();
      r.cr_f = cr_residual(F, g);
      r.cr_cf = cr_residual(C, g);
    }
  } catch (const DivergenceError& e) {
    r.diverged = true;
    r.message = e.what();
  } catch (const AccuracyError& e) {
    r.diverged = true;
    r.message = e.what();
  }
  if (r.norm_f.possibly_infinite || r.norm_cf.possibly_infinite) {
    r.message += (r.message.empty() ? "" : "; ") + (r.norm_f.possibly_infinite ? r.norm_f.note : r.norm_cf.note);
  }
  return r;
}

// ---- vector fields on R^{N+1}_+ ----

struct VectorField {
  using Component = std::function<double(std::span<const double>, double)>;
  std::vector<Component> components;  // u_0 .. u_N
  ProductWeight weight;
  double decay_scale = 1.0;  // |f| below e^{-|x|/decay_scale} far out
  std::string description;

  VectorField(std::vector<Component> cs, ProductWeight w, double decay, std::string desc)
      : components(std::move(cs)), weight(std::move(w)), decay_scale(decay), description(std::move(desc)) {
    if (weight.N > kMaxDimension) throw DomainError("vector fields need N <= 3");
    if (static_cast<int>(components.size()) != weight.N + 1) throw DomainError("need N + 1 components");
  }

  Components operator()(std::span<const double> x, double y) const {
    Components c;
    for (size_t j = 0; j < components.size(); ++j) c.v[j] = components[j](x, y);
    return c;
  }
};

inline Components cesaro_vector(const VectorField& f, const CesaroWeight& w, std::span<const double> x, double y,
                                const QuadratureSpec& spec) {
  if (!(y > 0)) throw DomainError("Cesaro operator needs y > 0");
  std::array<double, kMaxDimension> xs{};
  const size_t n = x.size();
  return cesaro_average(
      [&](double t) {
        for (size_t i = 0; i < n; ++i) xs[i] = x[i] / t;
        return (1.0 / t) * f(std::span<const double>(xs.data(), n), y / t);
      },
      w, spec);
}

// C_alpha |f| at a point, for the pointwise domination |C f| <= C |f|.
inline double cesaro_modulus(const VectorField& f, const CesaroWeight& w, std::span<const double> x, double y,
                             const QuadratureSpec& spec) {
  std::array<double, kMaxDimension> xs{};
  const size_t n = x.size();
  return cesaro_average(
      [&](double t) {
        for (size_t i = 0; i < n; ++i) xs[i] = x[i] / t;
        return f(std::span<const double>(xs.data(), n), y / t).modulus() / t;
      },
      w, spec);
}

namespace detail {

// Composite Gauss-Legendre nodes on [-R, R] with 0 as a panel edge, weights
// multiplied by |x|^{2 lambda}.
inline std::pair<std::vector<double>, std::vector<double>> weighted_axis(double lambda, double R, int panels) {
  const auto& gl = legendre_rule(8);
  std::vector<double> x, w;
  const double h = R / panels;
  for (int side : {-1, 1})
    for (int k = 0; k < panels; ++k)
      for (int i = 0; i < gl.order(); ++i) {
        const double u = h * (k + 0.5 * (1.0 + gl.nodes()[i]));
        x.push_back(side * u);
        w.push_back(0.5 * h * gl.weights()[i] * std::pow(u, 2.0 * lambda));
      }
  return {x, w};
}

}  // namespace detail

// sup over y of (int_{R^N} g(x, y)^p dmu(x))^{1/p} by tensor quadrature
// truncated at truncation_radius_factor * decay_scale per axis.
template <class G>
NormReport tensor_norm(G&& g, const ProductWeight& weight, double decay_scale, double p, const QuadratureSpec& spec,
                       const std::vector<double>& y_grid, int iterations) {
  if (!(p > 0)) throw DomainError("p must be positive");
  const double R = spec.truncation_radius_factor * decay_scale;
  std::vector<std::pair<std::vector<double>, std::vector<double>>> axes;
  for (double l : weight.lambdas) axes.push_back(detail::weighted_axis(l, R, 12));
  const int N = weight.N;
  auto section = [&](double y) {
    std::array<size_t, kMaxDimension> idx{};
    std::array<double, kMaxDimension> x{};
    double acc = 0;
    const size_t m = axes[0].first.size();
    for (;;) {
      double wt = 1;
      for (int d = 0; d < N; ++d) {
        x[d] = axes[d].first[idx[d]];
        wt *= axes[d].second[idx[d]];
      }
      acc += wt * std::pow(g(std::span<const double>(x.data(), N), y), p);
      int d = 0;
      while (d < N && ++idx[d] == m) idx[d++] = 0;
      if (d == N) break;
    }
    return std::pow(acc, 1.0 / p);
  };
  return sup_over_y(section, y_grid, iterations);
}

inline std::vector<double> vector_y_grid() { return log_grid(1e-2, 10.0, 10); }

// The sup of ||f|| sits in the denominator of every ratio, so it gets a long
// golden-section search; an underestimate there would fake a violation.
inline NormReport vector_norm(const VectorField& f, double p, const QuadratureSpec& spec,
                              const std::vector<double>& y_grid = vector_y_grid()) {
  return tensor_norm([&](std::span<const double> x, double y) { return f(x, y).modulus(); }, f.weight, f.decay_scale,
                     p, spec, y_grid, 24);
}

inline NormReport cesaro_vector_norm(const VectorField& f, const CesaroWeight& w, double p, const QuadratureSpec& spec,
                                     const std::vector<double>& y_grid = vector_y_grid()) {
  return tensor_norm([&](std::span<const double> x, double y) { return cesaro_vector(f, w, x, y, spec).modulus(); },
                     f.weight, f.decay_scale, p, spec, y_grid, 3);
}

}  // namespace dunkl
