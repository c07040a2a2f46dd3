#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qflag/session.hpp"

namespace qflag {

struct Budget {
  enum class Mode { Exhaustive, Sample };
  Mode mode = Mode::Exhaustive;
  int count = 0;

  static Budget exhaustive() { return {}; }
  static Budget sample(int k) { return {Mode::Sample, k}; }
  // "exhaustive" or "sample:K"
  static Budget parse(const std::string& text);
  // exhaustive for N = 2, sample:500 above
  static Budget default_for(int n);
  std::string to_string() const;
};

struct CheckResult {
  std::string description;
  std::string citation;
  bool pass = false;
  std::optional<std::string> witness;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  Budget budget;
  std::string note;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  nlohmann::json to_json(bool with_elapsed = true) const;
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& w) : Error("unknown-suite", w) {}
};
struct ResourceGuard : Error {
  explicit ResourceGuard(const std::string& w) : Error("resource-guard", w) {}
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  int min_n;
  int max_n;
};

const std::vector<SuiteInfo>& suites();

SuiteReport run_suite(const std::string& name, int n, std::uint64_t seed, Budget budget);
SuiteReport run_suite(const std::string& name, const Session& s, std::uint64_t seed, Budget budget);

}  // namespace qflag
