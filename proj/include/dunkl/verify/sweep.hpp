#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "../cesaro.hpp"
#include "../errors.hpp"
#include "../hardy.hpp"
#include "../parallel.hpp"
#include "../quadrature.hpp"

namespace dunkl::verify {

struct FieldDescriptor {
  std::string family = "cauchy";  // cauchy, spectral or homogeneous
  int m = 1;
  double y0 = 1.0;
  std::string kind = "P";  // homogeneous only: P, Q or PQ

  std::string label() const {
    if (family == "homogeneous") return "homogeneous_" + kind;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_m%d_y%g", family.c_str(), m, y0);
    return buf;
  }

  HalfPlaneField build(const WeightedLine& line, const QuadratureSpec& spec) const {
    if (family == "cauchy") return cauchy_field(line, y0, m);
    if (family == "spectral") return spectral_field(SpectralDensity::power_exponential(m, y0), line, spec);
    if (family == "homogeneous") {
      if (kind == "P") return homogeneous_kernel_field(line, HomogeneousKind::P);
      if (kind == "Q") return homogeneous_kernel_field(line, HomogeneousKind::Q);
      if (kind == "PQ") return homogeneous_kernel_field(line, HomogeneousKind::PQ);
      throw DomainError("homogeneous kind must be P, Q or PQ, not '" + kind + "'");
    }
    throw DomainError("unknown field family '" + family + "'");
  }
};

inline void to_json(nlohmann::json& j, const FieldDescriptor& f) {
  j = {{"family", f.family}, {"m", f.m}, {"y0", f.y0}, {"kind", f.kind}};
}

inline void from_json(const nlohmann::json& j, FieldDescriptor& f) {
  f = FieldDescriptor{};
  f.family = j.at("family").get<std::string>();
  f.m = j.value("m", f.m);
  f.y0 = j.value("y0", f.y0);
  f.kind = j.value("kind", f.kind);
}

struct SweepConfig {
  std::vector<double> lambdas = {0.3, 0.5, 1.0};
  std::vector<double> alphas = {0.5, 1.0, 2.0};
  std::vector<double> ps = {0.9, 1.0, 2.0};
  std::vector<FieldDescriptor> fields = {{"homogeneous", 0, 1.0, "P"}, {"cauchy", 1, 1.0, "P"}, {"cauchy", 2, 1.0, "P"}};
  QuadratureSpec quadrature;
  std::string output;
  std::string format = "csv";
};

inline void to_json(nlohmann::json& j, const SweepConfig& c) {
  j = {{"lambdas", c.lambdas}, {"alphas", c.alphas}, {"ps", c.ps},         {"fields", c.fields},
       {"quadrature", c.quadrature}, {"output", c.output}, {"format", c.format}};
}

// Missing keys keep their defaults.
inline void from_json(const nlohmann::json& j, SweepConfig& c) {
  c = SweepConfig{};
  c.lambdas = j.value("lambdas", c.lambdas);
  c.alphas = j.value("alphas", c.alphas);
  c.ps = j.value("ps", c.ps);
  if (j.contains("fields")) c.fields = j.at("fields").get<std::vector<FieldDescriptor>>();
  if (j.contains("quadrature")) c.quadrature = j.at("quadrature").get<QuadratureSpec>();
  c.output = j.value("output", c.output);
  c.format = j.value("format", c.format);
  if (c.format != "csv" && c.format != "json") throw DomainError("format must be csv or json");
}

struct SweepRow {
  double lambda = 0, alpha = 0, p = 0;
  std::string field;
  double ratio = kInf;
  double bound = 0;
  BoundKind bound_kind = BoundKind::none;
  bool pass = false;
  std::string message;
};

// p >= 1 rows pass when the ratio is within the Beta constant. p < 1 rows have
// no constant to meet and pass when the ratio is finite. Homogeneous P rows must
// also reproduce alpha B(2 lambda + 1, alpha).
inline bool row_passes(const SweepRow& r, bool homogeneous_p) {
  if (!std::isfinite(r.ratio)) return false;
  bool ok = r.p >= 1.0 ? r.ratio <= r.bound * (1.0 + 1e-6) : true;
  if (homogeneous_p) {
    const double want = r.alpha * std::beta(2.0 * r.lambda + 1.0, r.alpha);
    ok = ok && std::abs(r.ratio - want) <= 1e-8 * want;
  }
  return ok;
}

inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  struct Job {
    double lambda, alpha, p;
    const FieldDescriptor* field;
  };
  std::vector<Job> jobs;
  std::string rejected;
  for (double l : cfg.lambdas)
    for (const auto& fd : cfg.fields) {
      const HalfPlaneField F = fd.build(WeightedLine(l), cfg.quadrature);
      for (double p : cfg.ps) {
        if (!admits(F, p)) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "\n  lambda=%g p=%g %s: ", l, p, fd.label().c_str());
          rejected += buf + admission_reason(F, p);
          continue;
        }
        for (double a : cfg.alphas) jobs.push_back({l, a, p, &fd});
      }
    }
  if (!rejected.empty()) throw DomainError("sweep rejected before running:" + rejected);
  if (jobs.empty()) throw DomainError("sweep has no rows: every list in the config must be non-empty");

  auto rows = parallel_map<SweepRow>(jobs.size(), [&](size_t i) {
    const Job& j = jobs[i];
    const WeightedLine line(j.lambda);
    const HalfPlaneField F = j.field->build(line, cfg.quadrature);
    SweepRow r;
    r.lambda = j.lambda;
    r.alpha = j.alpha;
    r.p = j.p;
    r.field = j.field->label();
    const BoundReport b = lp_bound_constant(j.p, j.alpha, 2.0 * j.lambda + 1.0);
    r.bound = b.value;
    r.bound_kind = b.kind;
    const RatioReport rr = operator_ratio(F, CesaroWeight(j.alpha), j.p, cfg.quadrature, default_y_grid(), false);
    r.ratio = rr.diverged ? kInf : rr.ratio;
    r.message = rr.message;
    r.pass = row_passes(r, j.field->family == "homogeneous" && j.field->kind == "P");
    return r;
  });
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.lambda, a.alpha, a.p, a.field) < std::tie(b.lambda, b.alpha, b.p, b.field);
  });
  return rows;
}

inline bool sweep_passes(const std::vector<SweepRow>& rows) {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass; });
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "lambda,alpha,p,field,ratio,bound,bound_kind,pass\n";
  for (const auto& r : rows)
    out << format_double(r.lambda) << ',' << format_double(r.alpha) << ',' << format_double(r.p) << ',' << r.field << ','
        << format_double(r.ratio) << ',' << format_double(r.bound) << ',' << bound_kind_name(r.bound_kind) << ','
        << (r.pass ? "true" : "false") << '\n';
}

inline nlohmann::json sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"lambda", r.lambda},
                   {"alpha", r.alpha},
                   {"p", r.p},
                   {"field", r.field},
                   {"ratio", std::isfinite(r.ratio) ? nlohmann::json(r.ratio) : nlohmann::json("inf")},
                   {"bound", r.bound},
                   {"bound_kind", bound_kind_name(r.bound_kind)},
                   {"pass", r.pass},
                   {"message", r.message}});
  return out;
}

}  // namespace dunkl::verify
