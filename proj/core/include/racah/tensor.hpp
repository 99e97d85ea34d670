#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "racah/report.hpp"
#include "racah/usl2.hpp"

namespace racah {

// Monomial a^r b^s c^t in the central polynomial indeterminates.
struct AbcMonomial {
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int32_t c = 0;

  friend auto operator<=>(const AbcMonomial&, const AbcMonomial&) = default;
};

// Basis monomial of F[a,b,c] (x) U(sl2): a commutative part and an ordered
// enveloping-algebra part.  Sorting by the commutative part first gives the
// canonical printing and elimination order.
struct TensorMonomial {
  AbcMonomial abc;
  PBWMonomial pbw;

  friend auto operator<=>(const TensorMonomial&, const TensorMonomial&) = default;

  std::int32_t degree() const { return pbw.degree(); }
};

using TensorElement = Linear<TensorMonomial>;

TensorElement tensor_unit();  // 1 (x) 1
TensorElement t_a();          // a (x) 1
TensorElement t_b();          // b (x) 1
TensorElement t_c();          // c (x) 1

// 1 (x) u
TensorElement lift(const USl2Element& u);

// u (x) v for a single commutative monomial times an enveloping element.
TensorElement tensor_term(const AbcMonomial& abc, const USl2Element& u, const Scalar& c = Scalar(1));

// Multiplication is commutative-part exponent addition convolved with the
// enveloping-algebra product.
TensorElement operator*(const TensorElement& u, const TensorElement& v);

// Coefficient of the commutative monomial m, as an enveloping element.
USl2Element coeff_abc(const TensorElement& u, const AbcMonomial& m);
std::set<AbcMonomial> abc_support(const TensorElement& u);

// Degree-n component for the grading inherited from the enveloping factor.
TensorElement grade_project_tensor(const TensorElement& u, std::int32_t n);
std::map<std::int32_t, TensorElement> grade_decompose_tensor(const TensorElement& u);
bool is_homogeneous_tensor(const TensorElement& u, std::int32_t n);
std::pair<std::int32_t, std::int32_t> degree_span_tensor(const TensorElement& u);

// Ladder operators and diagonal shifts built from the equitable generators:
//   R     = 2 (x) y nu_x + 2 (c + a - b + 1) (x) nu_x         (degree  1)
//   L     = -2 (x) y nu_z - 2 (a - b - c - 1) (x) nu_z        (degree -1)
//   theta    = 1 (x) y - b (x) 1                              (degree  0)
//   vartheta = 1 (x) y + a (x) 1                              (degree  0)
TensorElement structural_R();
TensorElement structural_L();
TensorElement structural_theta();
TensorElement structural_vartheta();

// Checks the bracket, shift and product laws of R, L, theta, vartheta:
// commutation with the grading, the factored forms of RL and LR, and the
// mutual commutativity of {theta, vartheta, RL, LR, [R,L]}.
VerificationReport verify_structural_laws();

}  // namespace racah
