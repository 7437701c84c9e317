#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "../errors.hpp"
#include "../quadrature.hpp"

namespace dunkl::verify {

// How the measured value is compared with the threshold. Canaries use `above`.
enum class Compare { at_most, above };

struct CheckRecord {
  std::string id;
  std::string title;
  std::string anchor;  // the identity or bound under test, in words
  double measured = 0;
  double threshold = 0;
  Compare compare = Compare::at_most;
  bool pass = false;
  double seconds = 0;
  std::string note;

  bool operator==(const CheckRecord&) const;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 42;
  QuadratureSpec quadrature;
  std::vector<CheckRecord> records;
  bool pass = true;
  double seconds = 0;

  const CheckRecord* find(const std::string& id) const {
    for (const auto& r : records)
      if (r.id == id) return &r;
    return nullptr;
  }
  void add(CheckRecord r) {
    pass = pass && r.pass;
    records.push_back(std::move(r));
  }
  bool operator==(const VerificationReport&) const;
};

namespace detail {

// NaN == NaN here: a report that recorded a NaN must still round-trip equal.
inline bool same(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

inline nlohmann::json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline double number(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  throw DomainError("not a number: " + s);
}

}  // namespace detail

inline bool CheckRecord::operator==(const CheckRecord& o) const {
  return id == o.id && title == o.title && anchor == o.anchor && detail::same(measured, o.measured) &&
         detail::same(threshold, o.threshold) && compare == o.compare && pass == o.pass &&
         detail::same(seconds, o.seconds) && note == o.note;
}

inline bool VerificationReport::operator==(const VerificationReport& o) const {
  return suite == o.suite && seed == o.seed && quadrature == o.quadrature && records == o.records &&
         pass == o.pass && detail::same(seconds, o.seconds);
}

inline void to_json(nlohmann::json& j, const CheckRecord& r) {
  j = nlohmann::json{{"id", r.id},
                     {"title", r.title},
                     {"anchor", r.anchor},
                     {"measured", detail::number(r.measured)},
                     {"threshold", detail::number(r.threshold)},
                     {"compare", r.compare == Compare::at_most ? "<=" : ">"},
                     {"pass", r.pass},
                     {"seconds", detail::number(r.seconds)},
                     {"note", r.note}};
}

inline void from_json(const nlohmann::json& j, CheckRecord& r) {
  r.id = j.at("id").get<std::string>();
  r.title = j.at("title").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.measured = detail::number(j.at("measured"));
  r.threshold = detail::number(j.at("threshold"));
  r.compare = j.at("compare").get<std::string>() == ">" ? Compare::above : Compare::at_most;
  r.pass = j.at("pass").get<bool>();
  r.seconds = detail::number(j.at("seconds"));
  r.note = j.value("note", "");
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"suite", r.suite},         {"seed", r.seed}, {"quadrature", r.quadrature},
                     {"records", r.records},     {"pass", r.pass}, {"seconds", detail::number(r.seconds)}};
}

inline void from_json(const nlohmann::json& j, VerificationReport& r) {
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.quadrature = j.at("quadrature").get<QuadratureSpec>();
  r.records = j.at("records").get<std::vector<CheckRecord>>();
  r.pass = j.at("pass").get<bool>();
  r.seconds = detail::number(j.at("seconds"));
}

// Runs `measure`, times it, and turns quadrature failures into a failed
// record instead of aborting the suite.
// Where finished checks are announced; null (the default) keeps runs silent.
inline std::FILE*& progress_stream() {
  static std::FILE* stream = nullptr;
  return stream;
}

inline CheckRecord run_check(std::string id, std::string title, std::string anchor, double threshold,
                             const std::function<double(std::string&)>& measure, Compare compare = Compare::at_most) {
  CheckRecord r{std::move(id), std::move(title), std::move(anchor)};
  r.threshold = threshold;
  r.compare = compare;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.measured = measure(r.note);
    r.pass = compare == Compare::at_most ? r.measured <= threshold : r.measured > threshold;
  } catch (const AccuracyError& e) {
    r.measured = std::numeric_limits<double>::quiet_NaN();
    r.note = std::string("accuracy error: ") + e.what();
  } catch (const DivergenceError& e) {
    r.measured = std::numeric_limits<double>::quiet_NaN();
    r.note = std::string("divergence: ") + e.what();
  } catch (const DomainError& e) {
    r.measured = std::numeric_limits<double>::quiet_NaN();
    r.note = std::string("domain error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // NaN never passes either comparison.
  if (std::isnan(r.measured)) r.pass = false;
  if (std::FILE* out = progress_stream())
    std::fprintf(out, "%-4s %s %.3g (%.2fs)\n", r.id.c_str(), r.pass ? "pass" : "FAIL", r.measured, r.seconds);
  return r;
}

}  // namespace dunkl::verify
