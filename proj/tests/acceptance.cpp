// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// equality in Q(q^(1/N)); the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qflag/verify.hpp"

using namespace qflag;

namespace {

constexpr std::uint64_t kSeed = 2024;

struct Run {
  const char* suite;
  int n;
  Budget budget;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::vector<Run> runs;
};

bool evaluate(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0, failed = 0;
  std::string detail;
  for (const auto& r : c.runs) {
    try {
      Session s(r.n);
      SuiteReport rep = run_suite(r.suite, s, kSeed, r.budget);
      total += rep.checks.size();
      failed += rep.failures();
      for (const auto& ch : rep.checks)
        if (!ch.pass && detail.empty())
          detail = std::string(r.suite) + " N=" + std::to_string(r.n) + ": " + ch.description + " :: " + ch.witness.value_or("");
    } catch (const Error& e) {
      ++failed;
      if (detail.empty()) detail = std::string(r.suite) + " N=" + std::to_string(r.n) + ": error " + e.kind() + ": " + e.what();
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = failed == 0 && total > 0 && secs <= c.limit_seconds;
  std::printf("%s  criterion %2d  %-28s checks %zu/%zu  %.2f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
              total - failed, total, secs, c.limit_seconds);
  if (!detail.empty()) std::printf("      first failure: %.400s\n", detail.c_str());
  if (secs > c.limit_seconds) std::printf("      over the time limit\n");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main() {
  const Budget ex = Budget::exhaustive();
  const Budget s500 = Budget::sample(500);
  const Budget s200 = Budget::sample(200);
  const std::vector<Criterion> criteria = {
      {1, "hopf axioms", 10, {{"hopf-axioms", 2, ex}, {"hopf-axioms", 3, ex}}},
      {2, "coquasi-triangular", 30, {{"coquasi-triangular", 2, ex}, {"coquasi-triangular", 3, s500}}},
      {3, "killing closed forms", 60, {{"killing-closed-forms", 2, ex}, {"killing-closed-forms", 3, s500}}},
      {4, "lambda dimension", 60,
       {{"lambda-basis-dimension", 2, ex}, {"lambda-basis-dimension", 3, ex}, {"lambda-basis-dimension", 4, ex}}},
      {5, "su2 calculus example", 5, {{"su2-ideal", 2, ex}, {"su2-3d-nonisomorphism", 2, ex}}},
      {6, "sphere", 60,
       {{"sphere-relations", 2, ex},
        {"sphere-relations", 3, ex},
        {"sphere-relations", 4, ex},
        {"sphere-framing", 2, ex},
        {"sphere-framing", 3, ex}}},
      {7, "hopf-galois", 30, {{"hopf-galois-ver", 2, ex}, {"hopf-galois-ver", 3, s500}}},
      {8, "ad_R compatibility", 60, {{"adr-compatibility", 2, ex}, {"adr-compatibility", 3, ex}}},
      {9, "cp framing and podles", 120,
       {{"cpn-framing", 2, ex}, {"cpn-framing", 3, s200}, {"podles-recovery", 2, ex}}},
      {10, "connection", 30, {{"connection", 2, ex}, {"connection", 3, s500}}},
      {11, "oracle consistency", 120, {{"oracle-consistency", 2, ex}, {"oracle-consistency", 3, s500}}},
  };
  int failures = 0;
  for (const auto& c : criteria) failures += evaluate(c) ? 0 : 1;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
