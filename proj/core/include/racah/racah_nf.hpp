#pragma once

#include <compare>
#include <cstdint>

#include "racah/linear.hpp"
#include "racah/racah_expr.hpp"
#include "racah/report.hpp"

namespace racah {

// Exponents of the ordered basis monomial
//   A^i D^j B^k Omega^l alpha^r delta^s beta^t,   with j in {0, 1}.
// Omega denotes the Casimir combination OmegaA; gamma is eliminated via
// gamma = -alpha - beta and C via C = delta - A - B.
struct RacahMonomial {
  std::int32_t a = 0;
  std::int32_t d = 0;
  std::int32_t b = 0;
  std::int32_t omega = 0;
  std::int32_t alpha = 0;
  std::int32_t delta = 0;
  std::int32_t beta = 0;

  friend auto operator<=>(const RacahMonomial&, const RacahMonomial&) = default;
};

using RacahNF = Linear<RacahMonomial>;

// Expands an expression tree into the ordered basis.  See racah_nf.cpp for
// the rewriting system and the argument that it terminates.
RacahNF normalize(const RacahExpr& e);

// Product of two normal forms, again in normal form.
RacahNF operator*(const RacahNF& u, const RacahNF& v);

// Reads a normal form back as an expression tree (sum of scaled monomials).
RacahExpr to_expr(const RacahNF& u);

// Coefficient functional: the unique bilinear form making the ordered basis
// orthonormal.  Throws if the tuple is not a basis monomial (j must be 0 or
// 1 and all exponents nonnegative).
Scalar bilinear_form(const RacahNF& u, const RacahMonomial& basis);

// Defining polynomial of one of the three Casimir combinations, e.g.
//   OmegaA = D^2 + (BAC + CAB)/2 + A^2 + B gamma - C beta - A delta.
RacahExpr casimir_element(RacahGen which);

// Normalizes [u, g] for g in {A, B, C, D} and reports which brackets vanish.
VerificationReport check_centrality(const RacahExpr& u);
bool is_central(const RacahExpr& u);

}  // namespace racah
