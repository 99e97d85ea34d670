#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <nlohmann/json.hpp>

#include "racah/linear.hpp"
#include "racah/racah_nf.hpp"
#include "racah/report.hpp"

namespace racah {

// Commutative monomial x1^h x2^i x3^j x4^k used by the leading-monomial
// argument for the freeness of the central images.  The rank functional
// 5h + i + 3j + 2k totally orders the monomials that occur.
struct QuadMonomial {
  std::int32_t x1 = 0;
  std::int32_t x2 = 0;
  std::int32_t x3 = 0;
  std::int32_t x4 = 0;

  friend auto operator<=>(const QuadMonomial&, const QuadMonomial&) = default;

  long rank_value() const { return 5L * x1 + x2 + 3L * x3 + 2L * x4; }
};

using QuadPoly = Linear<QuadMonomial>;

QuadPoly quad_var(int index);  // x1..x4, 1-based
QuadPoly operator*(const QuadPoly& u, const QuadPoly& v);

// The four distinguished polynomials whose leading monomials in the rank
// order are pairwise solvable: a cubic, two products of differences, and
// the plain sum of the variables.
std::array<QuadPoly, 4> y_system();

// Unique monomial of maximal rank; throws on the zero polynomial or when
// two distinct monomials tie at the top rank.
QuadMonomial leading_monomial(const QuadPoly& p);
Scalar leading_coefficient(const QuadPoly& p);

// For all exponent vectors bounded by max_exp, the product of powers of the
// y-system has leading monomial x1^{2r+s+t+u} x2^r x3^s x4^t with unit
// coefficient, and the exponent vector can be solved back from it.
VerificationReport verify_leading_monomial_law(int max_exp);

// The monomials theta^n Omega^l alpha^r beta^s delta^t (images in the
// tensor algebra) of total degree up to the bound are linearly independent,
// and the same holds with vartheta in place of theta.  Also checks that the
// central images match the y-system under the substitution x1 = Casimir,
// x2 = a(a+1), x3 = b(b+1), x4 = c(c+1).
VerificationReport verify_theta_independence(int max_total_degree);

struct InjectivityOptions {
  // Caps for the exponents of A, D, B, Omega, alpha, delta, beta.
  std::array<std::int32_t, 7> caps{1, 1, 1, 1, 1, 1, 1};
  std::size_t limit = 2000;
};

struct InjectivityCertificate {
  std::array<std::int32_t, 7> caps{};
  std::size_t dimension = 0;
  std::size_t rank = 0;
  double elapsed_seconds = 0;
  bool injective = false;
};

// Embeds every ordered basis monomial within the caps and certifies that
// the images are linearly independent by an exact rank computation.
InjectivityCertificate injectivity_certificate(const InjectivityOptions& opt = {});

nlohmann::json to_json(const InjectivityCertificate& c);

}  // namespace racah
