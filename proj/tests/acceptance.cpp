// Acceptance gate: one line per criterion, nonzero exit if any line fails.
// A criterion passes when every check in its pinned configuration passes
// and the run stays inside its wall-clock budget.  Budgets and options are
// constants here on purpose -- they are part of what is being promised.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <racah/independence.hpp>
#include <racah/report.hpp>
#include <racah/suites.hpp>

using namespace racah;

namespace {

struct Criterion {
  const char* label;
  double budget_seconds;
  std::function<VerificationReport()> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VerificationReport suite(const char* name, const SuiteOptions& opt) {
  return run_suite(name, opt);
}

}  // namespace

int main() {
  SuiteOptions base;  // pinned defaults: seed, caps all 1, dims 1..5, 5 points

  SuiteOptions randomized = base;
  randomized.count = 1000;
  randomized.depth = 6;

  SuiteOptions pairs = base;
  pairs.count = 200;

  const std::vector<Criterion> criteria = {
      {"commutator identities", 1.0, [&] { return suite("equitable-commutators", base); }},
      {"ordered basis", 5.0, [&] { return suite("pbw-basis", base); }},
      {"homomorphism", 5.0, [&] { return suite("embedding-hom", base); }},
      {"graded tables", 30.0, [&] { return suite("grading-tables", base); }},
      {"casimir images", 30.0, [&] { return suite("casimir-images", base); }},
      {"normal form vs images", 300.0, [&] { return suite("normal-form-oracle", randomized); }},
      {"centrality", 10.0, [&] { return suite("centrality", base); }},
      {"independence", 120.0, [&] { return suite("independence", base); }},
      {"injectivity block", 600.0,
       [&] {
         VerificationReport r;
         r.suite = "injectivity";
         InjectivityCertificate cert = injectivity_certificate(InjectivityOptions{});
         r.check("acceptance/dimension", "caps (1,...,1) span 128 basis monomials",
                 cert.dimension == 128);
         r.check("acceptance/rank", "the 128 images have full rank",
                 cert.injective && cert.rank == cert.dimension);
         return r;
       }},
      {"matrix oracle", 60.0, [&] { return suite("rep-oracle", base); }},
      {"zero divisors", 60.0, [&] { return suite("zero-divisors", pairs); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    std::string error;
    try {
      report = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed = seconds_since(start);

    bool checks_ok = error.empty() && !report.checks.empty() && report.all_passed();
    bool in_budget = elapsed <= c.budget_seconds;
    bool ok = checks_ok && in_budget;
    if (!ok) ++failures;

    std::printf("criterion %2zu %-24s %s  (%zu/%zu checks, %.2fs, budget %.0fs)\n", i + 1,
                c.label, ok ? "PASS" : "FAIL", report.checks.size() - report.failed_count(),
                report.checks.size(), elapsed, c.budget_seconds);
    if (!error.empty()) std::printf("             error: %s\n", error.c_str());
    if (checks_ok && !in_budget) std::printf("             over budget\n");
    if (error.empty() && !checks_ok) {
      int shown = 0;
      for (const auto& chk : report.checks) {
        if (chk.passed) continue;
        std::printf("             failed: %s  %s\n", chk.id.c_str(), chk.statement.c_str());
        if (++shown == 5) break;
      }
    }
  }

  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
