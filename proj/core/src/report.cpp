#include "racah/report.hpp"

#include <utility>

namespace racah {

void VerificationReport::check(std::string id, std::string statement, bool ok,
                               std::string witness) {
  checks.push_back({std::move(id), std::move(statement), ok, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& sub) {
  checks.insert(checks.end(), sub.checks.begin(), sub.checks.end());
}

bool VerificationReport::all_passed() const { return failed_count() == 0; }

std::size_t VerificationReport::failed_count() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.passed) ++n;
  return n;
}

}  // namespace racah
