#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "../quadrature.hpp"
#include "report.hpp"

namespace dunkl::verify {

struct SuiteConfig {
  QuadratureSpec spec;
  std::uint64_t seed = 42;
};

// Property sampling only; every suite seeds its own stream from the config so
// suites give the same numbers alone or inside "all".
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream) : rng_(seed * 0x9E3779B97F4A7C15ull + stream) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  // Uniform on [lo, hi] but never within `gap` of zero.
  double nonzero(double lo, double hi, double gap = 1e-2) {
    for (;;) {
      const double v = uniform(lo, hi);
      if (std::abs(v) > gap) return v;
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_gap(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// |got - want| / max(1, |want|): relative for large values, absolute near zero.
inline double mixed_gap(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace dunkl::verify
