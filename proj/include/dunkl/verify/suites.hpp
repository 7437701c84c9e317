#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "../errors.hpp"
#include "../parallel.hpp"
#include "common.hpp"
#include "report.hpp"
#include "suite_cesaro.hpp"
#include "suite_hardy.hpp"
#include "suite_kernels.hpp"
#include "suite_poisson.hpp"
#include "suite_translation.hpp"

namespace dunkl::verify {

using SuiteFn = VerificationReport (*)(const SuiteConfig&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"kernels", kernels_suite}, {"translation", translation_suite}, {"poisson", poisson_suite},
      {"hardy", hardy_suite},     {"cesaro", cesaro_suite},
  };
  return table;
}

inline std::string suite_usage() {
  std::string s = "suite must be one of:";
  for (const auto& [name, fn] : suite_table()) s += " " + name;
  return s + " all";
}

// "all" runs every suite (in parallel where there are cores) and concatenates
// the records in table order; each suite seeds its own streams, so the result
// does not depend on the schedule.
inline VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name.empty()) throw DomainError("no suite given; " + suite_usage());
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  if (name == "all") {
    const auto& table = suite_table();
    const auto parts = parallel_map<VerificationReport>(table.size(), [&](size_t i) { return table[i].second(cfg); });
    rep.suite = "all";
    rep.seed = cfg.seed;
    rep.quadrature = cfg.spec;
    for (const auto& p : parts)
      for (const auto& r : p.records) rep.add(r);
  } else {
    SuiteFn fn = nullptr;
    for (const auto& [n, f] : suite_table())
      if (n == name) fn = f;
    if (!fn) throw DomainError("unknown suite '" + name + "'; " + suite_usage());
    rep = fn(cfg);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace dunkl::verify
