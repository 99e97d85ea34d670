#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string_view>
#include <utility>

#include "racah/linear.hpp"

namespace racah {

// Exponents (i, j, k) of an ordered monomial e^i h^j f^k in the universal
// enveloping algebra of sl2.  These monomials form a linear basis, so an
// element is a sparse map from exponent triples to rational coefficients.
// The Z-grading assigns degree -1 to e, 0 to h and 1 to f.
struct PBWMonomial {
  std::int32_t e = 0;
  std::int32_t h = 0;
  std::int32_t f = 0;

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;

  std::int32_t degree() const { return f - e; }
};

using USl2Element = Linear<PBWMonomial>;

// c * e^i h^j f^k
USl2Element pbw(std::int32_t i, std::int32_t j, std::int32_t k, const Scalar& c = Scalar(1));

USl2Element gen_e();
USl2Element gen_h();
USl2Element gen_f();

// Product in the enveloping algebra, returned in the ordered basis.  The
// straightening rules are he = eh + 2e, hf = fh - 2f (read backwards) and
// fe = ef - h, applied through closed-form exponent shifts; see usl2.cpp.
USl2Element operator*(const USl2Element& u, const USl2Element& v);
USl2Element pbw_product(const PBWMonomial& l, const PBWMonomial& r);

// Equitable generators x = -f - h/2, y = h/2, z = e - h/2 and the halved
// raising/lowering pair nu_x = f/2, nu_z = e/2.
USl2Element equitable_x();
USl2Element equitable_y();
USl2Element equitable_z();
USl2Element nu_x();
USl2Element nu_z();

// Normalized Casimir element ef + h(h-2)/4; generates the center.
USl2Element casimir();

// The element w = zyx + zx written in the ordered basis; it satisfies the
// same identity for all six bracketings shifted cyclically, which the test
// suite checks.
USl2Element w_element();

// Component of degree n, the span of monomials with k - i = n.
USl2Element grade_project(const USl2Element& u, std::int32_t n);
std::map<std::int32_t, USl2Element> grade_decompose(const USl2Element& u);
bool is_homogeneous(const USl2Element& u, std::int32_t n);

// {min, max} degree over the support; {0, 0} for the zero element.
std::pair<std::int32_t, std::int32_t> degree_span(const USl2Element& u);

// Left and right side of the product identity
//   e^i f^i = prod_{j=1}^{i} (Lambda - (h - 2j + 2)(h - 2j)/4),
// both expanded in the ordered basis.
std::pair<USl2Element, USl2Element> ef_power_identity(std::int32_t i);

// Slow reference normalizer: rewrites a word over the letters e, h, f by
// repeatedly straightening the leftmost out-of-order adjacent pair.  Used
// by tests as an independent oracle for operator*.
USl2Element pbw_from_word(std::string_view word);

}  // namespace racah
