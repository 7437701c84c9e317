// dunkl_lab: identity suites, Cesaro sweeps and kernel/field tables.
// Exit status: 0 when everything requested passed, 1 on a failed check or
// row, 2 on bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dunkl/verify/suites.hpp"
#include "dunkl/verify/sweep.hpp"
#include "dunkl/verify/tables.hpp"

using namespace dunkl;
using namespace dunkl::verify;

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void write_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

void print_report(const VerificationReport& rep) {
  for (const auto& r : rep.records)
    std::printf("%-4s %-4s %-40s measured %-10.3g %s %-8.3g %7.2fs  %s\n", r.id.c_str(), r.pass ? "ok" : "FAIL",
                r.title.c_str(), r.measured, r.compare == Compare::at_most ? "<=" : "> ", r.threshold, r.seconds,
                r.note.c_str());
  std::printf("suite %s: %s (%zu checks, %.1fs)\n", rep.suite.c_str(), rep.pass ? "PASS" : "FAIL", rep.records.size(),
              rep.seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl harmonic analysis lab: identity suites, Cesaro operator sweeps, kernel and field tables"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity suite and report per-check results");
  std::string suite, verify_json, verify_config;
  std::uint64_t seed = 42;
  bool progress = false;
  verify->add_option("--suite", suite, "kernels, translation, poisson, hardy, cesaro or all");
  verify->add_option("--json", verify_json, "write the report as JSON");
  auto* seed_opt = verify->add_option("--seed", seed, "seed for property sampling");
  verify->add_option("--config", verify_config, "JSON with optional quadrature and seed keys");
  verify->add_flag("--progress", progress, "announce each check on stderr as it finishes");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "operator ratios over (lambda, alpha, p, field)");
  std::string sweep_config, sweep_csv, sweep_json_out;
  sweep->add_option("--config", sweep_config, "sweep config JSON; defaults when omitted");
  sweep->add_option("--csv", sweep_csv, "CSV output path (overrides the config's output)");
  sweep->add_option("--json", sweep_json_out, "JSON output path");

  // kernel
  auto* kernel = app.add_subcommand("kernel", "tabulate E_lambda, the translation kernel W or the Poisson pair");
  double k_lambda = 0.5, k_x = 1.0, k_t = 0.5, k_y = 1.0;
  std::string k_grid = "-10:10:201", k_kind = "E", k_out;
  bool k_csv = true;
  kernel->add_option("--lambda", k_lambda, "multiplicity lambda > 0")->required();
  kernel->add_option("--grid", k_grid, "start:stop:count over z (or x for poisson)");
  kernel->add_option("--kind", k_kind, "E, W or poisson")->check(CLI::IsMember({"E", "W", "poisson"}));
  kernel->add_option("--x", k_x, "x for W");
  kernel->add_option("--t", k_t, "t for W and poisson");
  kernel->add_option("--y", k_y, "y for poisson");
  kernel->add_flag("--csv", k_csv, "CSV output (the only format)");
  kernel->add_option("--out", k_out, "output path; stdout when omitted");

  // field
  auto* field = app.add_subcommand("field", "tabulate a half-plane field u + iv");
  FieldDescriptor fd;
  double f_lambda = 0.5;
  std::string f_xgrid = "-4:4:81", f_out;
  std::vector<double> f_ys = {0.1, 0.5, 1.0, 2.0};
  bool f_csv = true;
  field->add_option("--family", fd.family, "cauchy, spectral or homogeneous")
      ->check(CLI::IsMember({"cauchy", "spectral", "homogeneous"}));
  field->add_option("--m", fd.m, "power m of xi^m e^{-y0 xi}");
  field->add_option("--y0", fd.y0, "shift y0 > 0");
  field->add_option("--kind", fd.kind, "P, Q or PQ for homogeneous fields");
  field->add_option("--lambda", f_lambda, "multiplicity lambda > 0")->required();
  field->add_option("--xgrid", f_xgrid, "start:stop:count over x");
  field->add_option("--ys", f_ys, "comma-separated heights")->delimiter(',');
  field->add_flag("--csv", f_csv, "CSV output (the only format)");
  field->add_option("--out", f_out, "output path; stdout when omitted");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      SuiteConfig cfg;
      if (!verify_config.empty()) {
        const auto j = read_json(verify_config);
        if (j.contains("quadrature")) cfg.spec = j.at("quadrature").get<QuadratureSpec>();
        cfg.seed = j.value("seed", cfg.seed);
      }
      if (*seed_opt) cfg.seed = seed;
      if (progress) progress_stream() = stderr;
      const VerificationReport rep = run_suite(suite, cfg);
      print_report(rep);
      if (!verify_json.empty()) write_to(verify_json, nlohmann::json(rep).dump(2) + "\n");
      return rep.pass ? 0 : 1;
    }
    if (*sweep) {
      SweepConfig cfg;
      if (!sweep_config.empty()) cfg = read_json(sweep_config).get<SweepConfig>();
      if (!sweep_csv.empty()) {
        cfg.output = sweep_csv;
        cfg.format = "csv";
      }
      const auto rows = run_sweep(cfg);
      if (!sweep_json_out.empty()) write_to(sweep_json_out, sweep_json(rows).dump(2) + "\n");
      if (cfg.format == "json") {
        write_to(cfg.output, sweep_json(rows).dump(2) + "\n");
      } else {
        std::ostringstream csv;
        write_sweep_csv(csv, rows);
        write_to(cfg.output, csv.str());
      }
      int failed = 0;
      for (const auto& r : rows) failed += !r.pass;
      std::fprintf(stderr, "sweep: %zu rows, %d failed\n", rows.size(), failed);
      return sweep_passes(rows) ? 0 : 1;
    }
    if (*kernel) {
      const auto grid = parse_grid(k_grid);
      std::ostringstream csv;
      if (k_kind == "E")
        write_kernel_csv(csv, k_lambda, grid, QuadratureSpec{});
      else if (k_kind == "W")
        write_w_csv(csv, k_lambda, k_x, k_t, grid);
      else
        write_poisson_csv(csv, k_lambda, k_y, k_t, grid, QuadratureSpec{});
      write_to(k_out, csv.str());
      return 0;
    }
    if (*field) {
      const HalfPlaneField F = fd.build(WeightedLine(f_lambda), QuadratureSpec{});
      std::ostringstream csv;
      write_field_csv(csv, F, parse_grid(f_xgrid), f_ys);
      write_to(f_out, csv.str());
      return 0;
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 1;
  }
  return 2;
}
