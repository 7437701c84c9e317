#include <cmath>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dunkl/parallel.hpp"
#include "dunkl/verify/report.hpp"
#include "dunkl/verify/suites.hpp"
#include "dunkl/verify/tables.hpp"

using namespace dunkl;
using namespace dunkl::verify;

TEST(Report, JsonRoundTripKeepsNonFinite) {
  VerificationReport rep;
  rep.suite = "demo";
  rep.seed = 7;
  rep.quadrature.jacobi_order = 32;
  rep.add(run_check("A1", "plain", "x <= 1", 1.0, [](std::string&) { return 0.25; }));
  rep.add(run_check("A2", "canary", "x > 1", 1.0, [](std::string&) { return kInf; }, Compare::above));
  rep.add(run_check("A3", "nan", "never passes", 1.0, [](std::string&) { return std::nan(""); }));
  rep.seconds = 1.5;
  const std::string text = nlohmann::json(rep).dump();
  const VerificationReport back = nlohmann::json::parse(text).get<VerificationReport>();
  EXPECT_EQ(back, rep);
  EXPECT_EQ(nlohmann::json(back).dump(), text);
  EXPECT_FALSE(rep.pass);
  EXPECT_TRUE(rep.find("A2")->pass);
  EXPECT_FALSE(rep.find("A3")->pass);
}

TEST(Report, NumericalErrorsBecomeFailures) {
  const CheckRecord r = run_check("E1", "throws", "", 1.0, [](std::string&) -> double {
    throw AccuracyError("ran out of levels", 1.0, 2.0);
  });
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(std::isnan(r.measured));
  EXPECT_NE(r.note.find("ran out of levels"), std::string::npos);
}

TEST(Parallel, OrderedAndDeterministic) {
  const auto a = parallel_map<double>(200, [](size_t i) { return std::sqrt(double(i)); });
  const auto b = parallel_map<double>(200, [](size_t i) { return std::sqrt(double(i)); });
  ASSERT_EQ(a.size(), 200u);
  EXPECT_EQ(a, b);
  for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], std::sqrt(double(i)));
  EXPECT_THROW(parallel_map<int>(10, [](size_t i) -> int { if (i == 3) throw std::runtime_error("x"); return 0; }),
               std::runtime_error);
}

TEST(Suites, NameErrors) {
  SuiteConfig cfg;
  EXPECT_THROW(run_suite("", cfg), DomainError);
  EXPECT_THROW(run_suite("bogus", cfg), DomainError);
}

TEST(Tables, GridParsing) {
  const auto g = parse_grid("-1:1:5");
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g[1], -0.5);
  EXPECT_EQ(parse_grid("2:9:1"), std::vector<double>{2.0});
  EXPECT_THROW(parse_grid("1:2"), DomainError);
  EXPECT_THROW(parse_grid("a:2:3"), DomainError);
  EXPECT_THROW(parse_grid("0:1:0"), DomainError);
  EXPECT_THROW(parse_grid("0:1:4x"), DomainError);
}
