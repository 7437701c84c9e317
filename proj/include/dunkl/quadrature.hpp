#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>
#include <vector>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "errors.hpp"

namespace dunkl {

using cplx = std::complex<double>;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureSpec {
  int jacobi_order = 64;
  int halfline_nodes = 256;
  double truncation_radius_factor = 20.0;
  double line_tolerance = 1e-10;
  int max_refinement_levels = 30;

  void validate() const {
    if (jacobi_order < 1) throw DomainError("jacobi_order must be >= 1");
    if (halfline_nodes < 21) throw DomainError("halfline_nodes must be >= 21");
    if (!(truncation_radius_factor > 0)) throw DomainError("truncation_radius_factor must be > 0");
    if (!(line_tolerance > 0) || line_tolerance >= 1) throw DomainError("line_tolerance must lie in (0,1)");
    if (max_refinement_levels < 1) throw DomainError("max_refinement_levels must be >= 1");
  }
  bool operator==(const QuadratureSpec&) const = default;
};

inline void to_json(nlohmann::json& j, const QuadratureSpec& q) {
  j = nlohmann::json{{"jacobi_order", q.jacobi_order},
                     {"halfline_nodes", q.halfline_nodes},
                     {"truncation_radius_factor", q.truncation_radius_factor},
                     {"line_tolerance", q.line_tolerance},
                     {"max_refinement_levels", q.max_refinement_levels}};
}

inline void from_json(const nlohmann::json& j, QuadratureSpec& q) {
  QuadratureSpec d;
  q.jacobi_order = j.value("jacobi_order", d.jacobi_order);
  q.halfline_nodes = j.value("halfline_nodes", d.halfline_nodes);
  q.truncation_radius_factor = j.value("truncation_radius_factor", d.truncation_radius_factor);
  q.line_tolerance = j.value("line_tolerance", d.line_tolerance);
  q.max_refinement_levels = j.value("max_refinement_levels", d.max_refinement_levels);
  q.validate();
}

// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1,1].
class JacobiRule {
 public:
  JacobiRule(double a, double b, std::vector<double> x, std::vector<double> w)
      : a_(a), b_(b), x_(std::move(x)), w_(std::move(w)) {}

  double a() const { return a_; }
  double b() const { return b_; }
  int order() const { return static_cast<int>(x_.size()); }
  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& weights() const { return w_; }

  template <class G>
  auto sum(G&& g) const {
    decltype(g(0.0)) acc{};
    for (size_t i = 0; i < x_.size(); ++i) acc += w_[i] * g(x_[i]);
    return acc;
  }

  // Weight (hi-s)^a (s-lo)^b on [lo,hi].
  template <class G>
  auto integrate_on(double lo, double hi, G&& g) const {
    const double half = 0.5 * (hi - lo);
    decltype(g(0.0)) acc{};
    for (size_t i = 0; i < x_.size(); ++i) acc += w_[i] * g(lo + half * (1.0 + x_[i]));
    return std::pow(half, a_ + b_ + 1.0) * acc;
  }

 private:
  double a_, b_;
  std::vector<double> x_, w_;
};

namespace detail {

// P_n^{(a,b)}(x) and its derivative by the three-term recurrence.
inline std::pair<double, double> jacobi_p(int n, double a, double b, double x) {
  if (n == 0) return {1.0, 0.0};
  const double ab = a + b;
  double p0 = 1.0;
  double p1 = 0.5 * ((ab + 2.0) * x + a - b);
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + ab;
    const double a1 = 2.0 * k * (k + ab) * (c - 2.0);
    const double a2 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
    const double a3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
    const double p2 = (a2 * p1 - a3 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  const double c = 2.0 * n + ab;
  const double dp = (n * ((a - b) - c * x) * p1 + 2.0 * (n + a) * (n + b) * p0) / (c * (1.0 - x * x));
  return {p1, dp};
}

}  // namespace detail

// Golub-Welsch for starting nodes, then Newton on the recurrence and the
// closed-form Christoffel weights.
inline JacobiRule build_jacobi_rule(double a, double b, int n) {
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("Jacobi exponents must exceed -1");
  if (n < 1) throw DomainError("Jacobi order must be >= 1");
  const double ab = a + b;
  Eigen::VectorXd diag(n), off(std::max(n - 1, 1));
  diag(0) = (b - a) / (ab + 2.0);
  for (int i = 1; i < n; ++i) diag(i) = (b * b - a * a) / ((2.0 * i + ab) * (2.0 * i + ab + 2.0));
  if (n > 1) {
    off(0) = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
    for (int i = 2; i < n; ++i) {
      const double c = 2.0 * i + ab;
      off(i - 1) = std::sqrt(4.0 * i * (i + a) * (i + b) * (i + ab) / (c * c * (c + 1.0) * (c - 1.0)));
    }
  }
  std::vector<double> x(n), w(n);
  if (n == 1) {
    x[0] = diag(0);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off.head(n - 1), Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) x[i] = es.eigenvalues()(i);
  }
  const double logc = std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) - std::lgamma(n + ab + 1.0) -
                      std::lgamma(n + 1.0) + (ab + 1.0) * std::numbers::ln2;
  for (int i = 0; i < n; ++i) {
    double xi = x[i];
    for (int it = 0; it < 8; ++it) {
      auto [p, dp] = detail::jacobi_p(n, a, b, xi);
      const double dx = p / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    x[i] = std::clamp(xi, -1.0, 1.0);
    const double dp = detail::jacobi_p(n, a, b, x[i]).second;
    w[i] = std::exp(logc) / ((1.0 - x[i] * x[i]) * dp * dp);
  }
  return JacobiRule(a, b, std::move(x), std::move(w));
}

// Rules are immutable once built, so one copy per (a,b,n) is shared.
inline std::shared_ptr<const JacobiRule> jacobi_rule(double a, double b, int n) {
  static std::mutex mu;
  static std::map<std::tuple<double, double, int>, std::shared_ptr<const JacobiRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(a, b, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const JacobiRule>(build_jacobi_rule(a, b, n));
  cache.emplace(key, rule);
  return rule;
}

inline const JacobiRule& legendre_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const JacobiRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const JacobiRule>(build_jacobi_rule(0.0, 0.0, n));
  return *slot;
}

// 21-point Kronrod extension of the 10-point Gauss rule.
namespace gk21 {
inline constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208109961402, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
}  // namespace gk21

struct Panel {
  double lo = 0, hi = 0;
  cplx value{};
  double error = 0;
  double mass = 0;
  int depth = 0;
  bool head = false;  // Gauss-Jacobi panel at the origin
};

struct IntegralEstimate {
  cplx value{};
  double error = 0;
  double mass = 0;  // estimate of the integral of |f|
  int evaluations = 0;
};

namespace detail {

inline constexpr double kMassFraction = 1e-3;
inline constexpr int kMaxPanels = 4000;

// Integrand on GK panels is x^s g(x).
template <class G>
cplx weighted_eval(G& g, double x, double s) {
  cplx v = g(x);
  if (s != 0.0) v *= std::pow(x, s);
  return v;
}

template <class G>
Panel gk21_panel(G& g, double lo, double hi, double s, int depth) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  std::array<cplx, 21> fv;
  fv[20] = weighted_eval(g, c, s);
  cplx resk = gk21::wgk[10] * fv[20];
  cplx resg{};
  for (int j = 0; j < 10; ++j) {
    fv[2 * j] = weighted_eval(g, c - h * gk21::xgk[j], s);
    fv[2 * j + 1] = weighted_eval(g, c + h * gk21::xgk[j], s);
    resk += gk21::wgk[j] * (fv[2 * j] + fv[2 * j + 1]);
    if (j % 2 == 1) resg += gk21::wg[j / 2] * (fv[2 * j] + fv[2 * j + 1]);
  }
  const cplx mean = 0.5 * resk;
  double resabs = gk21::wgk[10] * std::abs(fv[20]);
  double resasc = gk21::wgk[10] * std::abs(fv[20] - mean);
  for (int j = 0; j < 10; ++j) {
    resabs += gk21::wgk[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
    resasc += gk21::wgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.depth = depth;
  p.value = resk * h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * resabs);
  if (!std::isfinite(std::abs(p.value))) err = kInf;
  p.error = err;
  p.mass = resabs;
  return p;
}

// int_0^h x^s g(x) dx with Gauss-Jacobi rules of two orders.
template <class G>
Panel head_panel(G& g, double h, double s, int depth) {
  const auto& lo_rule = *jacobi_rule(0.0, s, 20);
  const auto& hi_rule = *jacobi_rule(0.0, s, 40);
  const double scale = std::pow(0.5 * h, s + 1.0);
  cplx a = lo_rule.integrate_on(0.0, h, [&](double x) { return g(x); });
  cplx b{};
  double abs_sum = 0;
  for (int i = 0; i < hi_rule.order(); ++i) {
    const cplx v = g(0.5 * h * (1.0 + hi_rule.nodes()[i]));
    b += hi_rule.weights()[i] * v;
    abs_sum += hi_rule.weights()[i] * std::abs(v);
  }
  b *= scale;
  Panel p;
  p.lo = 0.0;
  p.hi = h;
  p.depth = depth;
  p.head = true;
  p.value = b;
  p.mass = scale * abs_sum;
  p.error = std::abs(b - a);
  p.error = std::max(p.error, 50.0 * std::numeric_limits<double>::epsilon() * p.mass);
  if (!std::isfinite(std::abs(b))) p.error = kInf;
  return p;
}

}  // namespace detail

// Adaptive integration of x^s g(x) over the panels defined by `breaks`.
// When `head` is set, the first panel starts at 0 and is handled by a
// Gauss-Jacobi rule that absorbs x^s. The target is
//   tol * max(|I|, 1e-3 * int|f|), floored at `abs_floor`.
template <class G>
IntegralEstimate adaptive_integrate(G&& g, const std::vector<double>& breaks, const QuadratureSpec& spec,
                                    double s = 0.0, bool head = false, double abs_floor = 0.0) {
  std::vector<Panel> panels;
  panels.reserve(64);
  int evals = 0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    if (i == 0 && head) {
      panels.push_back(detail::head_panel(g, breaks[1], s, 0));
      evals += 60;
    } else {
      panels.push_back(detail::gk21_panel(g, breaks[i], breaks[i + 1], s, 0));
      evals += 21;
    }
  }
  cplx previous{};
  for (;;) {
    cplx total{};
    double err = 0, mass = 0;
    for (const auto& p : panels) {
      total += p.value;
      err += p.error;
      mass += p.mass;
    }
    const double target =
        std::max(spec.line_tolerance * std::max(std::abs(total), detail::kMassFraction * mass), abs_floor);
    if (err <= target) return {total, err, mass, evals};
    int worst = -1;
    for (size_t i = 0; i < panels.size(); ++i) {
      if (panels[i].depth >= spec.max_refinement_levels) continue;
      if (worst < 0 || panels[i].error > panels[worst].error) worst = static_cast<int>(i);
    }
    if (worst < 0 || static_cast<int>(panels.size()) >= detail::kMaxPanels)
      throw AccuracyError("adaptive quadrature did not reach tolerance", total, previous);
    previous = total;
    Panel p = panels[worst];
    const double mid = 0.5 * (p.lo + p.hi);
    if (p.head) {
      panels[worst] = detail::head_panel(g, mid, s, p.depth + 1);
      evals += 60;
    } else {
      panels[worst] = detail::gk21_panel(g, p.lo, mid, s, p.depth + 1);
      evals += 21;
    }
    panels.push_back(detail::gk21_panel(g, mid, p.hi, s, p.depth + 1));
    evals += 21;
  }
}

// Sum of x^s g over [start, inf) on doubling panels. Stops once two panels in
// a row are negligible, or once the panel contributions have settled into a
// geometric progression whose remainder can be summed in closed form.
template <class G>
IntegralEstimate integrate_tail(G&& g, double start, const QuadratureSpec& spec, double s, cplx reference,
                                double reference_mass) {
  IntegralEstimate out;
  std::vector<cplx> c;
  cplx remainder_prev{};
  bool have_prev = false;
  double a = start;
  const double tol = spec.line_tolerance;
  for (int k = 0; k < 400; ++k) {
    auto ref = [&] {
      return tol * std::max(std::abs(reference + out.value), detail::kMassFraction * (reference_mass + out.mass));
    };
    auto piece = adaptive_integrate(g, {a, 2.0 * a}, spec, s, false, 0.25 * ref());
    out.value += piece.value;
    out.error += piece.error;
    out.mass += piece.mass;
    out.evaluations += piece.evaluations;
    c.push_back(piece.value);
    a *= 2.0;
    const double r = ref();
    const size_t n = c.size();
    if (n >= 2 && std::abs(c[n - 1]) <= r && std::abs(c[n - 2]) <= r) return out;
    if (n >= 3 && c[n - 2] != 0.0 && c[n - 3] != 0.0) {
      const cplx q = c[n - 1] / c[n - 2];
      const cplx qp = c[n - 2] / c[n - 3];
      if (std::abs(q) < 0.97 && std::abs(q - qp) < 0.2 * (1.0 - std::abs(q))) {
        const cplx rem = c[n - 1] * q / (1.0 - q);
        if (have_prev && std::abs(rem - (remainder_prev - c[n - 1])) <= r) {
          out.value += rem;
          out.error += std::abs(rem - (remainder_prev - c[n - 1]));
          return out;
        }
        remainder_prev = rem;
        have_prev = true;
        continue;
      }
    }
    have_prev = false;
  }
  throw AccuracyError("tail did not converge", reference + out.value, reference);
}

// Wynn epsilon acceleration of a sequence of partial sums.
class WynnEpsilon {
 public:
  cplx push(cplx s) {
    std::vector<cplx> next;
    next.reserve(diag_.size() + 1);
    next.push_back(s);
    for (size_t k = 1; k <= diag_.size() && k <= kDepth; ++k) {
      const cplx diff = next[k - 1] - diag_[k - 1];
      if (diff == 0.0) break;
      const cplx base = k >= 2 ? diag_[k - 2] : cplx{};
      next.push_back(base + 1.0 / diff);
    }
    diag_ = std::move(next);
    const size_t top = (diag_.size() - 1) & ~size_t{1};
    return diag_[top];
  }

 private:
  static constexpr size_t kDepth = 40;
  std::vector<cplx> diag_;
};

// int_start^inf g for an oscillating, algebraically decaying g: partial sums
// over half periods, accelerated with the epsilon algorithm.
template <class G>
IntegralEstimate integrate_oscillatory_tail(G&& g, double start, double half_period, const QuadratureSpec& spec,
                                            double reference) {
  IntegralEstimate out;
  WynnEpsilon wynn;
  cplx partial{};
  cplx est_prev{}, est_prev2{};
  for (int k = 0; k < 400; ++k) {
    const double a = start + k * half_period;
    auto piece = adaptive_integrate(g, {a, a + half_period}, spec, 0.0, false,
                                    0.1 * spec.line_tolerance * std::max(reference, 1e-300));
    partial += piece.value;
    out.mass += piece.mass;
    out.evaluations += piece.evaluations;
    const cplx est = wynn.push(partial);
    const double scale = spec.line_tolerance * std::max(reference, std::abs(est));
    if (k >= 8 && std::abs(est - est_prev) <= scale && std::abs(est_prev - est_prev2) <= scale) {
      out.value = est;
      out.error = std::abs(est - est_prev);
      return out;
    }
    est_prev2 = est_prev;
    est_prev = est;
  }
  throw AccuracyError("oscillatory tail did not converge", est_prev, est_prev2);
}

// Geometry of a half-line integral: where the integrand lives and how it decays.
struct HalflineShape {
  double scale = 1.0;        // characteristic length
  bool exponential = true;   // false: algebraic decay, needs a summed tail
  double support = kInf;     // integrand vanishes beyond this point
  std::vector<double> breakpoints;
};

// int_0^inf x^s g(x) dx.
template <class G>
IntegralEstimate integrate_zero_to_inf(G&& g, double s, const HalflineShape& shape, const QuadratureSpec& spec) {
  if (!(s > -1.0)) throw DomainError("origin exponent must exceed -1");
  double radius = spec.truncation_radius_factor * shape.scale;
  const bool finite = std::isfinite(shape.support);
  if (finite) radius = shape.support;
  const int nb = std::max(2, spec.halfline_nodes / 21);
  std::vector<double> breaks;
  for (int i = 0; i <= nb; ++i) breaks.push_back(radius * i / nb);
  for (double b : shape.breakpoints)
    if (b > 0 && b < radius) breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [&](double u, double v) { return std::abs(u - v) <= 1e-12 * radius; }),
               breaks.end());
  auto main = adaptive_integrate(g, breaks, spec, s, true);
  if (finite) return main;
  auto tail = integrate_tail(g, radius, spec, s, main.value, main.mass);
  return {main.value + tail.value, main.error + tail.error, main.mass + tail.mass,
          main.evaluations + tail.evaluations};
}

// int_0^inf xi^s g(xi) d xi for a g with exponential decay on `decay_scale`.
template <class G>
cplx integrate_halfline(G&& g, double decay_scale, const QuadratureSpec& spec, double origin_exponent = 0.0) {
  if (!(decay_scale > 0)) throw DomainError("decay scale must be positive");
  HalflineShape shape;
  shape.scale = std::isfinite(decay_scale) ? decay_scale : 1.0;
  shape.exponential = std::isfinite(decay_scale);
  return integrate_zero_to_inf(g, origin_exponent, shape, spec).value;
}

}  // namespace dunkl
