#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace racah {

// One verified statement: a stable id, the claim in words, and the outcome.
// When a check fails, witness holds a rendering of the discrepancy.
struct CheckResult {
  std::string id;
  std::string statement;
  bool passed = true;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  void check(std::string id, std::string statement, bool ok, std::string witness = {});
  void merge(const VerificationReport& sub);
  bool all_passed() const;
  std::size_t failed_count() const;
};

}  // namespace racah
