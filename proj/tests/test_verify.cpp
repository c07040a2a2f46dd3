#include <doctest.h>

#include <set>

#include "qflag/verify.hpp"

using namespace qflag;

TEST_CASE("budget parsing") {
  CHECK(Budget::parse("exhaustive").mode == Budget::Mode::Exhaustive);
  Budget b = Budget::parse("sample:25");
  CHECK(b.mode == Budget::Mode::Sample);
  CHECK(b.count == 25);
  CHECK(b.to_string() == "sample:25");
  CHECK_THROWS_AS(Budget::parse("sample:0"), PreconditionError);
  CHECK_THROWS_AS(Budget::parse("sample:3x"), PreconditionError);
  CHECK_THROWS_AS(Budget::parse("all"), PreconditionError);
  CHECK(Budget::default_for(2).mode == Budget::Mode::Exhaustive);
  CHECK(Budget::default_for(3).to_string() == "sample:500");
}

TEST_CASE("registry") {
  std::set<std::string> names;
  for (const auto& s : suites()) names.insert(s.name);
  for (const char* want : {"hopf-axioms", "coquasi-triangular", "killing-closed-forms", "lambda-basis-dimension",
                           "vd-submodule", "su2-ideal", "su2-3d-nonisomorphism", "sphere-relations", "hopf-galois-ver",
                           "adr-compatibility", "fiber-calculi", "sphere-framing", "cpn-framing", "podles-recovery",
                           "connection", "oracle-consistency"})
    CHECK(names.count(want) == 1);
  CHECK_THROWS_AS(run_suite("no-such-suite", 2, 0, Budget::exhaustive()), UnknownSuite);
  CHECK_THROWS_AS(run_suite("su2-ideal", 3, 0, Budget::exhaustive()), ResourceGuard);
  CHECK_THROWS_AS(run_suite("cpn-framing", 5, 0, Budget::exhaustive()), ResourceGuard);
}

TEST_CASE("podles-recovery passes and every check is cited") {
  SuiteReport r = run_suite("podles-recovery", 2, 0, Budget::exhaustive());
  CHECK(r.failures() == 0);
  CHECK(r.checks.size() > 12);
  for (const auto& c : r.checks) {
    CHECK_FALSE(c.citation.empty());
    CHECK_FALSE(c.witness.has_value());
  }
  nlohmann::json j = r.to_json();
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["checks"][0].contains("paper_citation"));
}

TEST_CASE("reports are deterministic in the seed") {
  Session s(3);
  auto a = run_suite("oracle-consistency", s, 5, Budget::sample(20)).to_json(false).dump();
  auto b = run_suite("oracle-consistency", s, 5, Budget::sample(20)).to_json(false).dump();
  CHECK(a == b);
  auto c = run_suite("oracle-consistency", s, 6, Budget::sample(20)).to_json(false).dump();
  CHECK(a != c);
}

TEST_CASE("sampled reports say they are evidence") {
  SuiteReport r = run_suite("coquasi-triangular", 3, 1, Budget::sample(10));
  CHECK(r.note.find("evidence") != std::string::npos);
  CHECK(r.failures() == 0);
  SuiteReport e = run_suite("sphere-relations", 2, 1, Budget::exhaustive());
  CHECK(e.note.find("exhaustive") != std::string::npos);
}

TEST_CASE("checks are sorted by description") {
  SuiteReport r = run_suite("su2-ideal", 2, 0, Budget::exhaustive());
  for (std::size_t k = 1; k < r.checks.size(); ++k) CHECK(r.checks[k - 1].description <= r.checks[k].description);
}
