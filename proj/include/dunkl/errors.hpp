#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dunkl {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Refinement ran out of budget. Carries the last two estimates so callers can
// judge how far off the answer is.
struct AccuracyError : std::runtime_error {
  std::complex<double> last;
  std::complex<double> previous;
  AccuracyError(const std::string& what, std::complex<double> last_estimate,
                std::complex<double> previous_estimate)
      : std::runtime_error(what), last(last_estimate), previous(previous_estimate) {}
};

struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dunkl
