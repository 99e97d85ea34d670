#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "racah/racah_nf.hpp"
#include "racah/report.hpp"
#include "racah/tensor.hpp"
#include "racah/usl2.hpp"

namespace racah {

// Plain-text renderings; terms are printed in descending monomial order so
// that, e.g., a product of A and B prints before the lower-order D term.
// The output reparses to the same element.
std::string to_text(const USl2Element& u);
std::string to_text(const TensorElement& u);
std::string to_text(const RacahNF& u);

std::string to_latex(const USl2Element& u);
std::string to_latex(const TensorElement& u);
std::string to_latex(const RacahNF& u);

nlohmann::json to_json(const USl2Element& u);
nlohmann::json to_json(const TensorElement& u);
nlohmann::json to_json(const RacahNF& u);
nlohmann::json to_json(const VerificationReport& r);

std::string report_to_text(const VerificationReport& r, bool verbose = true);

// Report helpers: record an equality (witnessing the difference on failure)
// or a vanishing statement.
template <class E>
void expect_equal(VerificationReport& r, std::string id, std::string statement, const E& lhs,
                  const E& rhs) {
  bool ok = lhs == rhs;
  std::string witness;
  if (!ok) witness = "difference: " + to_text(lhs - rhs);
  r.check(std::move(id), std::move(statement), ok, std::move(witness));
}

template <class E>
void expect_zero(VerificationReport& r, std::string id, std::string statement, const E& u) {
  bool ok = u.is_zero();
  std::string witness;
  if (!ok) witness = "value: " + to_text(u);
  r.check(std::move(id), std::move(statement), ok, std::move(witness));
}

}  // namespace racah
