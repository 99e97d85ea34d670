#pragma once

#include <map>

#include "racah/racah_expr.hpp"
#include "racah/racah_nf.hpp"
#include "racah/report.hpp"
#include "racah/tensor.hpp"

namespace racah {

// Images of the eleven abstract generators inside F[a,b,c] (x) U(sl2).
// A, B, C map to quadratic expressions in the equitable generators with
// polynomial coefficients, D to the cyclically invariant cubic element, and
// the central generators to polynomials in a, b, c and the Casimir.
const std::map<RacahGen, TensorElement>& generator_images();
const TensorElement& gen_image(RacahGen g);

// Evaluates an expression tree through the generator images.
TensorElement embed(const RacahExpr& e);

// Embeds a normal form through a memoized table of basis-monomial images.
TensorElement embed(const RacahNF& u);
const TensorElement& embed_basis(const RacahMonomial& m);

// The defining relations of the abstract algebra hold for the images, the
// bracket [image(A), image(B)] matches 2 image(D) coefficient by
// coefficient in a, b, c, and the central images match their closed forms.
VerificationReport verify_homomorphism();

// Graded components: the images live in degrees -1..1 with the documented
// components, and powers and mixed products have the predicted extreme
// components built from R, L, theta, vartheta.
VerificationReport verify_homogeneous_tables(int max_power = 4, int max_triple_total = 4);

// Images of the three Casimir combinations equal closed-form polynomials in
// a, b, c and the Casimir of the enveloping factor; the graded pieces of
// the products entering that computation match their documented tables.
VerificationReport verify_casimir_images();

}  // namespace racah
