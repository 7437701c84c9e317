// One line per acceptance criterion, read off a full verification report.
// Usage: acceptance [report.json]. Without a report the full run happens here.

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/verify/suites.hpp"

using namespace dunkl::verify;

namespace {

struct Criterion {
  int number;
  std::string what;
  std::vector<std::string> checks;
  double time_limit;  // seconds over the listed checks; 0 means none
};

}  // namespace

int main(int argc, char** argv) {
  VerificationReport rep;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::fprintf(stderr, "cannot open %s\n", argv[1]);
      return 2;
    }
    rep = nlohmann::json::parse(in).get<VerificationReport>();
  } else {
    rep = run_suite("all", SuiteConfig{});
  }

  const std::vector<Criterion> criteria = {
      {1, "kernel duality <= 1e-9, under 5 s", {"K9"}, 5},
      {2, "eigenrelation residual <= 1e-7", {"K11"}, 0},
      {3, "product formula residual <= 1e-6", {"T4"}, 0},
      {4, "translation axioms and Young bound, under 60 s", {"T1", "T2", "T6", "T7"}, 60},
      {5, "Poisson transform pairs <= 1e-6", {"P4"}, 0},
      {6, "CR <= 1e-5, harmonicity <= 1e-4, canary > 1e-2", {"H1", "H2", "H3"}, 0},
      {7, "semigroup and contraction", {"P6", "P7"}, 0},
      {8, "Cesaro closed forms <= 1e-8", {"C2"}, 0},
      {9, "multiplier equivalence <= 1e-6, under 3 min", {"C6"}, 180},
      {10, "p >= 1 ratio within alpha B((2 lambda+1)/p, alpha)", {"C8"}, 0},
      {11, "p <= 1 ratios finite and stable; dyadic majorant holds", {"C9", "C10"}, 0},
  };

  bool all = true;
  for (const auto& c : criteria) {
    bool ok = true;
    double seconds = 0;
    std::string detail;
    for (const auto& id : c.checks) {
      const CheckRecord* r = rep.find(id);
      if (!r) {
        ok = false;
        detail += id + " missing; ";
        continue;
      }
      ok = ok && r->pass;
      seconds += r->seconds;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s %.3g%s%.3g; ", id.c_str(), r->measured, r->compare == Compare::at_most ? " <= " : " > ",
                    r->threshold);
      detail += buf;
    }
    if (c.time_limit > 0) {
      ok = ok && seconds < c.time_limit;
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.1fs (limit %.0fs)", seconds, c.time_limit);
      detail += buf;
    }
    all = all && ok;
    std::printf("criterion %2d %s  %s  [%s]\n", c.number, ok ? "PASS" : "FAIL", c.what.c_str(), detail.c_str());
  }

  const bool full = rep.suite == "all" && rep.pass && rep.seconds < 600;
  int failed = 0;
  for (const auto& r : rep.records) failed += !r.pass;
  std::printf("criterion 12 %s  full run passes in under 10 minutes  [%zu checks, %d failed, %.1fs]\n",
              full ? "PASS" : "FAIL", rep.records.size(), failed, rep.seconds);
  all = all && full;
  return all ? 0 : 1;
}
