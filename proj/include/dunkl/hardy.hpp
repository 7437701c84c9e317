#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dunkl.hpp"
#include "errors.hpp"
#include "line.hpp"
#include "poisson.hpp"
#include "quadrature.hpp"

namespace dunkl {

// Value of F = u + iv and its partials at one point.
struct FieldJet {
  cplx f{}, dx{}, dy{}, dxx{}, dyy{};

  FieldJet& operator+=(const FieldJet& o) {
    f += o.f;
    dx += o.dx;
    dy += o.dy;
    dxx += o.dxx;
    dyy += o.dyy;
    return *this;
  }
  friend FieldJet operator*(double a, FieldJet j) {
    j.f *= a;
    j.dx *= a;
    j.dy *= a;
    j.dxx *= a;
    j.dyy *= a;
    return j;
  }
  friend FieldJet operator*(FieldJet j, double a) { return a * j; }
};

enum class FieldFamily { spectral, cauchy, homogeneous, custom };

inline const char* family_name(FieldFamily f) {
  switch (f) {
    case FieldFamily::spectral: return "spectral";
    case FieldFamily::cauchy: return "cauchy";
    case FieldFamily::homogeneous: return "homogeneous";
    default: return "custom";
  }
}

// phi on (0, inf); zero on (-inf, 0]. `power` is the order of vanishing at 0
// and `shift` the exponential rate, so phi ~ xi^power e^{-shift xi}.
struct SpectralDensity {
  std::function<cplx(double)> phi;
  double decay_scale = 1.0;
  int power = 0;
  std::string description;

  cplx operator()(double xi) const { return xi > 0 ? phi(xi) : cplx{}; }
  double shift() const { return 1.0 / decay_scale; }

  // xi^m e^{-y0 xi}
  static SpectralDensity power_exponential(int m, double y0) {
    if (m < 0) throw DomainError("power must be nonnegative");
    if (!(y0 > 0)) throw DomainError("y0 must be positive");
    SpectralDensity d;
    d.phi = [m, y0](double xi) { return cplx(std::pow(xi, m) * std::exp(-y0 * xi)); };
    d.decay_scale = 1.0 / y0;
    d.power = m;
    d.description = "xi^" + std::to_string(m) + " exp(-" + std::to_string(y0) + " xi)";
    return d;
  }
};

// A candidate lambda-analytic function on the upper half plane.
struct HalfPlaneField {
  std::optional<WeightedLine> line;
  std::function<cplx(double, double)> value;
  std::function<FieldJet(double, double)> jet;  // optional analytic partials
  int jet_order = 0;                            // 1: first partials, 2: also second
  FieldFamily family = FieldFamily::custom;
  std::string description;
  std::optional<double> homogeneity_degree;  // F(x/t, y/t) = t^d F(x, y)
  bool even_modulus = false;                 // |F(-x, y)| = |F(x, y)|
  double decay_exponent = kInf;              // |F(x, y)| ~ |x|^{-decay_exponent}
  double shift = 0.0;                        // sections live on the scale y + shift

  const WeightedLine& weighted_line() const {
    if (!line) throw DomainError("field has no weighted line");
    return *line;
  }
  cplx operator()(double x, double y) const { return value(x, y); }
  double u(double x, double y) const { return value(x, y).real(); }
  double v(double x, double y) const { return value(x, y).imag(); }
  double section_scale(double y) const { return y + shift; }
};

namespace detail {

inline double field_step(double x) { return 1e-4 * std::max(1.0, std::abs(x)); }
inline double field_step_y(double y) { return std::min(1e-4 * std::max(1.0, y), 0.25 * y); }

// Second difference with one Richardson step.
template <class F>
cplx second_difference(F&& f, double x, double h) {
  const cplx c = f(x);
  auto d = [&](double s) { return (f(x + s) - 2.0 * c + f(x - s)) / (s * s); };
  return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

}  // namespace detail

// Partials by finite differences of the value only.
inline FieldJet finite_difference_jet(const HalfPlaneField& F, double x, double y) {
  FieldJet j;
  j.f = F(x, y);
  j.dx = richardson_derivative([&](double s) { return F(s, y); }, x, detail::field_step(x));
  j.dy = richardson_derivative([&](double s) { return F(x, s); }, y, detail::field_step_y(y));
  const double hx = 2e-3 * std::max(1.0, std::abs(x)), hy = std::min(2e-3 * std::max(1.0, y), 0.25 * y);
  j.dxx = detail::second_difference([&](double s) { return F(s, y); }, x, hx);
  j.dyy = detail::second_difference([&](double s) { return F(x, s); }, y, hy);
  return j;
}

// Best available partials: analytic where the field has them, otherwise
// differences of the analytic first partials, otherwise of the values.
inline FieldJet field_jet(const HalfPlaneField& F, double x, double y) {
  if (!F.jet || F.jet_order == 0) return finite_difference_jet(F, x, y);
  FieldJet j = F.jet(x, y);
  if (F.jet_order >= 2) return j;
  j.dxx = richardson_derivative([&](double s) { return F.jet(s, y).dx; }, x, detail::field_step(x));
  j.dyy = richardson_derivative([&](double s) { return F.jet(x, s).dy; }, y, detail::field_step_y(y));
  return j;
}

// F_m = c int_0^inf xi^m e^{-Y xi} E(i x xi) xi^{2 lambda} d xi with Y = y + y0,
// summed in closed form:
//   F_m = m_lambda/2 sum_k C(m,k) (lambda)_k (lambda+1)_{m-k} A^{-(lambda+k)} B^{-(lambda+1+m-k)}
// where A = Y + ix, B = Y - ix.
class CauchyTerms {
 public:
  CauchyTerms(double lambda, double m_lambda, int m) : lambda_(lambda), m_(m) {
    if (m < 0) throw DomainError("power must be nonnegative");
    for (int k = 0; k <= m; ++k) {
      double c = 0.5 * m_lambda * std::tgamma(m + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(m - k + 1.0));
      c *= std::tgamma(lambda + k) / std::tgamma(lambda) * std::tgamma(lambda + 1.0 + m - k) / std::tgamma(lambda + 1.0);
      coef_.push_back(c);
    }
  }

  cplx value(double x, double Y) const {
    const double rho = std::hypot(Y, x);
    const cplx e(Y / rho, x / rho);  // e^{i theta}
    const cplx e2 = e * e;
    // e^{i(1+m-2k) theta}, k = 0..m
    cplx phase = std::pow(e, m_ + 1);
    const cplx step = std::conj(e2);
    cplx sum{};
    for (int k = 0; k <= m_; ++k) {
      sum += coef_[k] * phase;
      phase *= step;
    }
    return std::pow(rho, -(2.0 * lambda_ + 1.0 + m_)) * sum;
  }

  FieldJet jet(double x, double Y) const {
    const cplx A(Y, x), B(Y, -x);
    const cplx ia = 1.0 / A, ib = 1.0 / B;
    const double rho = std::abs(A);
    const cplx e = A / rho;
    const cplx step = std::conj(e * e);
    cplx phase = std::pow(e, m_ + 1);
    const double r = std::pow(rho, -(2.0 * lambda_ + 1.0 + m_));
    FieldJet out;
    for (int k = 0; k <= m_; ++k) {
      const double a = lambda_ + k, b = lambda_ + 1.0 + m_ - k;
      const cplx f = coef_[k] * r * phase;
      const cplx gx = cplx(0, 1) * (-a * ia + b * ib);
      const cplx gy = -a * ia - b * ib;
      const cplx h = a * ia * ia + b * ib * ib;
      out.f += f;
      out.dx += f * gx;
      out.dy += f * gy;
      out.dxx += f * (gx * gx - h);
      out.dyy += f * (gy * gy + h);
      phase *= step;
    }
    return out;
  }

 private:
  double lambda_;
  int m_;
  std::vector<double> coef_;
};

// The spectral field of xi^m e^{-y0 xi}, in closed form.
inline HalfPlaneField cauchy_field(const WeightedLine& line, double y0, int m) {
  if (!(y0 > 0)) throw DomainError("cauchy field needs y0 > 0");
  auto terms = std::make_shared<CauchyTerms>(line.lambda(), line.m(), m);
  HalfPlaneField F;
  F.line = line;
  F.value = [terms, y0](double x, double y) { return terms->value(x, y + y0); };
  F.jet = [terms, y0](double x, double y) { return terms->jet(x, y + y0); };
  F.jet_order = 2;
  F.family = FieldFamily::cauchy;
  F.description = "cauchy(m=" + std::to_string(m) + ",y0=" + std::to_string(y0) + ")";
  F.even_modulus = true;
  F.decay_exponent = 2.0 * line.lambda() + 1.0 + m;
  F.shift = y0;
  return F;
}

enum class HomogeneousKind { P, Q, PQ };

inline const char* homogeneous_name(HomogeneousKind k) {
  switch (k) {
    case HomogeneousKind::P: return "P";
    case HomogeneousKind::Q: return "Q";
    default: return "PQ";
  }
}

// P_y(x), Q_y(x) or P_y(x) + i Q_y(x); degree 2 lambda + 1.
inline HalfPlaneField homogeneous_kernel_field(const WeightedLine& line, HomogeneousKind kind) {
  auto terms = std::make_shared<CauchyTerms>(line.lambda(), line.m(), 0);
  auto pick = [kind](cplx z) {
    z *= 2.0;
    if (kind == HomogeneousKind::P) return cplx(z.real());
    if (kind == HomogeneousKind::Q) return cplx(z.imag());
    return z;
  };
  HalfPlaneField F;
  F.line = line;
  F.value = [terms, pick](double x, double y) {
    if (!(y > 0)) throw DomainError("field needs y > 0");
    return pick(terms->value(x, y));
  };
  F.jet = [terms, pick](double x, double y) {
    const FieldJet j = terms->jet(x, y);
    return FieldJet{pick(j.f), pick(j.dx), pick(j.dy), pick(j.dxx), pick(j.dyy)};
  };
  F.jet_order = 2;
  F.family = FieldFamily::homogeneous;
  F.description = std::string("homogeneous ") + homogeneous_name(kind);
  F.homogeneity_degree = 2.0 * line.lambda() + 1.0;
  F.even_modulus = true;
  F.decay_exponent = 2.0 * line.lambda() + (kind == HomogeneousKind::P ? 2.0 : 1.0);
  return F;
}

// F(x, y) = c int_0^inf e^{-y xi} phi(xi) E(i x xi) xi^{2 lambda} d xi by quadrature.
inline HalfPlaneField spectral_field(const SpectralDensity& phi, const WeightedLine& line, const QuadratureSpec& spec) {
  auto integral = [phi, line, spec](double x, double y, int which) -> cplx {
    if (!(y > 0)) throw DomainError("spectral field needs y > 0");
    HalflineShape shape;
    shape.scale = 1.0 / (y + phi.shift());
    auto g = [&](double xi) -> cplx {
      const cplx base = std::exp(-y * xi) * phi(xi);
      switch (which) {
        case 0: return base * line.kernel(x * xi);
        case 1: return base * xi * line.kernel_derivative(x * xi);
        default: return -xi * base * line.kernel(x * xi);
      }
    };
    return line.c() * integrate_zero_to_inf(g, 2.0 * line.lambda(), shape, spec).value;
  };
  HalfPlaneField F;
  F.line = line;
  F.value = [integral](double x, double y) { return integral(x, y, 0); };
  F.jet = [integral](double x, double y) {
    FieldJet j;
    j.f = integral(x, y, 0);
    j.dx = integral(x, y, 1);
    j.dy = integral(x, y, 2);
    return j;
  };
  F.jet_order = 1;
  F.family = FieldFamily::spectral;
  F.description = "spectral(" + phi.description + ")";
  F.even_modulus = true;  // real phi: F(-x, y) is the conjugate of F(x, y)
  F.decay_exponent = 2.0 * line.lambda() + 1.0 + phi.power;
  F.shift = phi.shift();
  return F;
}

// u + iv with u = v = P: not lambda-analytic; the canary for the residual test.
inline HalfPlaneField broken_field(const WeightedLine& line) {
  HalfPlaneField P = homogeneous_kernel_field(line, HomogeneousKind::P);
  HalfPlaneField F = P;
  F.value = [P](double x, double y) { return P(x, y) * cplx(1, 1); };
  F.jet =[P](double x, double y) {
    FieldJet j = P.jet(x, y);
    const cplx w(1, 1);
    return FieldJet{j.f * w, j.dx * w, j.dy * w, j.dxx * w, j.dyy * w};
  };
  F.description = "broken (P, P)";
  F.family = FieldFamily::custom;
  return F;
}

// (u, v) -> (-v, u), i.e. F -> iF.
inline HalfPlaneField conjugate_swap(const HalfPlaneField& G) {
  HalfPlaneField F = G;
  const cplx i(0, 1);
  F.value = [G, i](double x, double y) { return i * G(x, y); };
  if (G.jet)
    F.jet = [G, i](double x, double y) {
      FieldJet j = G.jet(x, y);
      return FieldJet{i * j.f, i * j.dx, i * j.dy, i * j.dxx, i * j.dyy};
    };
  F.description = "swap " + G.description;
  return F;
}

inline HalfPlaneField scaled_field(const HalfPlaneField& G, cplx c) {
  HalfPlaneField F = G;
  F.value = [G, c](double x, double y) { return c * G(x, y); };
  if (G.jet)
    F.jet = [G, c](double x, double y) {
      FieldJet j = G.jet(x, y);
      return FieldJet{c * j.f, c * j.dx, c * j.dy, c * j.dxx, c * j.dyy};
    };
  F.description = "scaled " + G.description;
  return F;
}

struct HalfPlaneGrid {
  std::vector<double> xs, ys;
};

// 9 x 5: x in [-2, 2], y in {1/4, ..., 4}.
inline HalfPlaneGrid standard_grid() {
  HalfPlaneGrid g;
  for (int i = 0; i < 9; ++i) g.xs.push_back(-2.0 + 0.5 * i);
  g.ys = {0.25, 0.5, 1.0, 2.0, 4.0};
  return g;
}

// |D_x u - d_y v| + |d_y u + D_x v| at one point.
inline double cr_residual_at(const HalfPlaneField& F, double x, double y) {
  const double l = F.weighted_line().lambda();
  auto jet_at = [&](double s) { return field_jet(F, s, y); };
  const FieldJet j = jet_at(x);
  cplx DF;
  if (std::abs(x) < 1e-8) {
    DF = dunkl_derivative_of([&](double s) { return F(s, y); }, [&](double s) { return jet_at(s).dx; }, x, l);
  } else {
    DF = j.dx + l / x * (j.f - F(-x, y));
  }
  // D_x acts on u and v separately; u and v are the real and imaginary parts.
  const double Dxu = DF.real(), Dxv = DF.imag();
  return std::abs(Dxu - j.dy.imag()) + std::abs(j.dy.real() + Dxv);
}

inline double cr_residual(const HalfPlaneField& F, const HalfPlaneGrid& grid) {
  double worst = 0;
  for (double y : grid.ys)
    for (double x : grid.xs) worst = std::max(worst, cr_residual_at(F, x, y));
  return worst;
}

// |Delta_lambda u| + |Delta_lambda v| with
//   D_x^2 g = g_xx + (2 lambda / x) g_x - (lambda / x^2)(g(x) - g(-x)).
inline double harmonicity_residual_at(const HalfPlaneField& F, double x, double y) {
  const double l = F.weighted_line().lambda();
  const FieldJet j = field_jet(F, x, y);
  cplx D2;
  if (std::abs(x) < 1e-8) {
    const FieldJet jm = field_jet(F, -x, y);
    D2 = (2.0 * l + 1.0) * 0.5 * (j.dxx + jm.dxx);
  } else {
    D2 = j.dxx + 2.0 * l / x * j.dx - l / (x * x) * (j.f - F(-x, y));
  }
  const cplx lap = D2 + j.dyy;
  return std::abs(lap.real()) + std::abs(lap.imag());
}

inline double harmonicity_residual(const HalfPlaneField& F, const HalfPlaneGrid& grid) {
  double worst = 0;
  for (double y : grid.ys)
    for (double x : grid.xs) worst = std::max(worst, harmonicity_residual_at(F, x, y));
  return worst;
}

// Largest relative gap between the analytic partials and finite differences.
inline double partials_gap(const HalfPlaneField& F, const std::vector<std::pair<double, double>>& points) {
  if (!F.jet) return 0.0;
  double worst = 0;
  for (auto [x, y] : points) {
    const FieldJet a = F.jet(x, y);
    const cplx dx = richardson_derivative([&](double s) { return F(s, y); }, x, detail::field_step(x));
    const cplx dy = richardson_derivative([&](double s) { return F(x, s); }, y, detail::field_step_y(y));
    const double scale = std::max({1.0, std::abs(a.dx), std::abs(a.dy)});
    worst = std::max({worst, std::abs(a.dx - dx) / scale, std::abs(a.dy - dy) / scale});
    if (F.jet_order >= 2) {
      const FieldJet b = finite_difference_jet(F, x, y);
      const double s2 = std::max({1.0, std::abs(a.dxx), std::abs(a.dyy)});
      worst = std::max({worst, std::abs(a.dxx - b.dxx) / s2, std::abs(a.dyy - b.dyy) / s2});
    }
  }
  return worst;
}

// max over t of |F(x/t, y/t) - t^d F(x, y)| / |t^d F(x, y)|
inline double homogeneity_gap(const HalfPlaneField& F, const HalfPlaneGrid& grid, std::vector<double> ts = {0.5, 0.25}) {
  if (!F.homogeneity_degree) throw DomainError("field has no homogeneity degree");
  const double d = *F.homogeneity_degree;
  double worst = 0;
  for (double t : ts)
    for (double y : grid.ys)
      for (double x : grid.xs) {
        const cplx want = std::pow(t, d) * F(x, y);
        worst = std::max(worst, std::abs(F(x / t, y / t) - want) / std::max(std::abs(want), 1e-300));
      }
  return worst;
}

// ---- admission ----

// Smallest exponent for which the field's sections are p-integrable and the
// Hardy space is nontrivial: max(2 lambda/(2 lambda+1), (2 lambda+1)/decay).
inline double admission_threshold(const HalfPlaneField& F) {
  const double l = F.weighted_line().lambda();
  return std::max(2.0 * l / (2.0 * l + 1.0), (2.0 * l + 1.0) / F.decay_exponent);
}

inline bool admits(const HalfPlaneField& F, double p) { return p > admission_threshold(F); }

inline std::string admission_reason(const HalfPlaneField& F, double p) {
  const double l = F.weighted_line().lambda();
  if (p <= 2.0 * l / (2.0 * l + 1.0))
    return "p = " + std::to_string(p) + " is at or below 2 lambda/(2 lambda+1) = " + std::to_string(2 * l / (2 * l + 1));
  if (p * F.decay_exponent <= 2.0 * l + 1.0)
    return "sections decay like |x|^-" + std::to_string(F.decay_exponent) + ", not p-integrable for p = " +
           std::to_string(p) + " (needs p > " + std::to_string((2 * l + 1) / F.decay_exponent) + ")";
  return "";
}

inline void require_admitted(const HalfPlaneField& F, double p) {
  if (!admits(F, p)) throw DomainError(F.description + " rejected: " + admission_reason(F, p));
}

// ---- H^p norm ----

// x -> |F(x, y)| as a profile.
inline Profile section_profile(const HalfPlaneField& F, double y) {
  Profile s;
  s.f = [F, y](double x) { return cplx(std::abs(F(x, y))); };
  s.parity = F.even_modulus ? Parity::even : Parity::none;
  s.length_scale = F.section_scale(y);
  s.description = "|" + F.description + "| at y = " + std::to_string(y);
  return s;
}

inline double section_norm(const HalfPlaneField& F, double y, double p, const QuadratureSpec& spec) {
  return lp_quasinorm(section_profile(F, y), NormSpec::of(p), F.weighted_line(), spec);
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / (n - 1)));
  return g;
}

inline std::vector<double> default_y_grid() { return log_grid(1e-3, 1e2, 24); }

// Inserts the geometric midpoints; the old grid stays a subset.
inline std::vector<double> refine_grid(const std::vector<double>& g) {
  std::vector<double> out;
  for (size_t i = 0; i < g.size(); ++i) {
    out.push_back(g[i]);
    if (i + 1 < g.size()) out.push_back(std::sqrt(g[i] * g[i + 1]));
  }
  return out;
}

struct NormReport {
  double value = 0;
  double argmax_y = 0;
  bool possibly_infinite = false;
  std::string note;
  std::vector<std::pair<double, double>> sections;  // (y, section norm), grid then refinement
};

// sup_y of the section norm: grid maximum, then golden-section search in
// log y between the neighbours of the grid argmax.
template <class SectionNorm>
NormReport sup_over_y(SectionNorm&& norm_at, const std::vector<double>& y_grid, int iterations = 3) {
  if (y_grid.size() < 2) throw DomainError("y grid needs at least two points");
  NormReport r;
  std::vector<double> vals;
  for (double y : y_grid) {
    vals.push_back(norm_at(y));
    r.sections.emplace_back(y, vals.back());
  }
  const size_t n = vals.size();
  const size_t i = std::max_element(vals.begin(), vals.end()) - vals.begin();
  r.value = vals[i];
  r.argmax_y = y_grid[i];
  if (i == 0 && vals[0] > 1.01 * vals[1]) {
    r.possibly_infinite = true;
    r.note = "section norm still growing at the smallest y; norm possibly infinite";
  }
  if (i == n - 1 && vals[n - 1] > 1.01 * vals[n - 2]) {
    r.possibly_infinite = true;
    r.note = "section norm still growing at the largest y; norm possibly infinite";
  }
  double a = std::log(y_grid[i == 0 ? 0 : i - 1]), b = std::log(y_grid[i == n - 1 ? n - 1 : i + 1]);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  auto eval = [&](double ly) {
    const double y = std::exp(ly), v = norm_at(y);
    r.sections.emplace_back(y, v);
    if (v > r.value) {
      r.value = v;
      r.argmax_y = y;
    }
    return v;
  };
  double fc = eval(c), fd = eval(d);
  for (int it = 0; it < iterations; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = eval(d);
    }
  }
  return r;
}

inline NormReport hardy_quasinorm(const HalfPlaneField& F, double p, const QuadratureSpec& spec,
                                  const std::vector<double>& y_grid = default_y_grid()) {
  const double l = F.weighted_line().lambda();
  if (!(p > 2.0 * l / (2.0 * l + 1.0)))
    throw DomainError("H^p needs p > 2 lambda/(2 lambda+1) = " + std::to_string(2 * l / (2 * l + 1)));
  return sup_over_y([&](double y) { return section_norm(F, y, p, spec); }, y_grid);
}

// P applied to the boundary section F(., y_b), compared with F(., y_b + y).
inline double boundary_recovery_gap(const HalfPlaneField& F, double y_b,
                                    const std::vector<std::pair<double, double>>& points, const QuadratureSpec& spec) {
  const WeightedLine& line = F.weighted_line();
  Profile f;
  f.f = [F, y_b](double x) { return F(x, y_b); };
  f.parity = Parity::none;
  f.length_scale = F.section_scale(y_b);
  f.description = "boundary section of " + F.description;
  double worst = 0;
  for (auto [x, y] : points) {
    const cplx want = F(x, y_b + y);
    const cplx got = poisson_integral(f, x, y, line, spec);
    worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
  }
  return worst;
}

}  // namespace dunkl
