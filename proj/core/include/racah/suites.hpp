#pragma once

// Named verification suites.  Each suite machine-checks one body of
// statements about the algebras: commutator identities, basis faithfulness,
// the homomorphism property of the generator images, graded-component
// tables, Casimir closed forms, normal-form soundness, centrality,
// algebraic independence, injectivity, finite-dimensional evaluation, and
// the absence of zero divisors on sampled elements.  The command-line tool
// exposes them by name; the test binaries run them with pinned options.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "racah/report.hpp"

namespace racah {

struct SuiteOptions {
  std::uint64_t seed = 0xACE5EEDull;  // randomized suites are fully seeded
  std::size_t count = 200;            // sample count for randomized suites
  int depth = 6;                      // random expression tree depth
  int grade_power = 4;                // power bound for graded-component tables
  int grade_triple = 4;               // total-degree bound for mixed products
  int degree = 2;                     // exponent bound for independence suites
  std::array<std::int32_t, 7> caps{1, 1, 1, 1, 1, 1, 1};  // injectivity caps
  std::size_t limit = 2000;           // injectivity monomial-count guard
  std::vector<std::int32_t> dims{1, 2, 3, 4, 5};  // evaluation dimensions
  std::size_t points = 5;             // evaluation points per dimension
};

using SuiteFn = std::function<VerificationReport(const SuiteOptions&)>;

struct SuiteEntry {
  std::string name;
  std::string summary;
  SuiteFn run;
};

const std::vector<SuiteEntry>& suite_registry();
std::vector<std::string> suite_names();
bool has_suite(const std::string& name);

// Throws std::out_of_range for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<VerificationReport> run_all_suites(const SuiteOptions& opt = {});

}  // namespace racah
