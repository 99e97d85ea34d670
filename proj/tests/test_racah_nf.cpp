#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <racah/embedding.hpp>
#include <racah/format.hpp>
#include <racah/racah_expr.hpp>
#include <racah/racah_nf.hpp>

using namespace racah;

namespace {

RacahExpr g(RacahGen x) { return RacahExpr::gen(x); }

const RacahExpr A = g(RacahGen::A);
const RacahExpr B = g(RacahGen::B);
const RacahExpr C = g(RacahGen::C);
const RacahExpr D = g(RacahGen::D);
const RacahExpr al = g(RacahGen::Alpha);
const RacahExpr be = g(RacahGen::Beta);
const RacahExpr ga = g(RacahGen::Gamma);
const RacahExpr de = g(RacahGen::Delta);
const RacahExpr Om = g(RacahGen::OmegaA);

}  // namespace

TEST_CASE("reordering B past A produces the ordered quadratic minus the bracket") {
  RacahNF u = normalize(B * A);
  CHECK(u.term_count() == 2);
  CHECK(u.coeff(RacahMonomial{1, 0, 1, 0, 0, 0, 0}) == Scalar(1));
  CHECK(u.coeff(RacahMonomial{0, 1, 0, 0, 0, 0, 0}) == Scalar(-2));
  CHECK(to_text(u) == "A B - 2 D");
}

TEST_CASE("each reordering step agrees with the faithful image of both sides") {
  // The four exchange laws that drive normalization, stated as tree-level
  // identities.  Normalization maps both sides to the same basis element,
  // and evaluating both trees through the generator images gives the same
  // tensor element -- the latter never invokes the rewriting code, so it is
  // an independent witness.
  const RacahExpr one = RacahExpr::constant(Scalar(1));
  const Scalar two(2);

  struct Law {
    const char* name;
    RacahExpr lhs;
    RacahExpr rhs;
  };
  const Law laws[] = {
      {"BA", B * A, A * B - two * D},
      {"DA", D * A, A * D + two * D - A * A - two * (A * B) - al + A * de},
      {"BD", B * D, D * B + two * D - B * B - two * (A * B) + be + B * de},
      {"DD", D * D,
       Om + A * A * B + A * B * B + two * (A * B) - two * (A * D) - two * (D * B) - two * D -
           A * B * de + D * de + B * al - A * be + de * be + al},
  };
  for (const auto& law : laws) {
    CAPTURE(law.name);
    CHECK(normalize(law.lhs) == normalize(law.rhs));
    CHECK(embed(law.lhs) == embed(law.rhs));
  }
}

TEST_CASE("eliminated generators reduce to their defining combinations") {
  CHECK(normalize(ga) == normalize(-(al + be)));
  CHECK(normalize(C) == normalize(de - A - B));
  // ... and the pairwise brackets all equal the same element 2D.
  CHECK(normalize(comm(A, B)) == normalize(Scalar(2) * D));
  CHECK(normalize(comm(B, C)) == normalize(Scalar(2) * D));
  CHECK(normalize(comm(C, A)) == normalize(Scalar(2) * D));
}

TEST_CASE("second exponents above one never survive normalization") {
  for (const RacahExpr& e : random_racah_exprs(40, 0xD0Dull)) {
    RacahNF u = normalize(e);
    for (const auto& [m, c] : u.terms()) {
      CHECK(m.d >= 0);
      CHECK(m.d <= 1);
      CHECK(m.a >= 0);
      CHECK(m.b >= 0);
      CHECK(m.omega >= 0);
      CHECK(m.alpha >= 0);
      CHECK(m.delta >= 0);
      CHECK(m.beta >= 0);
      CHECK(c != 0);
    }
  }
}

TEST_CASE("coefficient functional extracts single basis coefficients") {
  RacahNF u = normalize(B * A + frac(1, 3) * Om * de);
  CHECK(bilinear_form(u, RacahMonomial{1, 0, 1, 0, 0, 0, 0}) == Scalar(1));
  CHECK(bilinear_form(u, RacahMonomial{0, 1, 0, 0, 0, 0, 0}) == Scalar(-2));
  CHECK(bilinear_form(u, RacahMonomial{0, 0, 0, 1, 0, 1, 0}) == frac(1, 3));
  CHECK(bilinear_form(u, RacahMonomial{0, 0, 0, 0, 0, 0, 0}) == Scalar(0));
  CHECK(bilinear_form(u, RacahMonomial{5, 1, 5, 0, 0, 0, 0}) == Scalar(0));
  // Tuples outside the basis are rejected rather than silently read as zero.
  CHECK_THROWS(bilinear_form(u, RacahMonomial{0, 2, 0, 0, 0, 0, 0}));
  CHECK_THROWS(bilinear_form(u, RacahMonomial{-1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("casimir combinations collapse onto the basis generator") {
  // The defining polynomial of each Casimir combination normalizes to the
  // same element as the corresponding generator symbol.
  for (RacahGen which : {RacahGen::OmegaA, RacahGen::OmegaB, RacahGen::OmegaC}) {
    CAPTURE(gen_name(which));
    CHECK(normalize(casimir_element(which)) == normalize(g(which)));
  }
  CHECK(to_text(normalize(g(RacahGen::OmegaB))) ==
        "Omega + alpha delta + alpha + delta beta + beta");
  CHECK(to_text(normalize(g(RacahGen::OmegaC))) == "Omega + delta beta + beta");
}

TEST_CASE("centrality detector accepts the center and rejects the rest") {
  CHECK(is_central(al));
  CHECK(is_central(de));
  CHECK(is_central(Om));
  CHECK(is_central(g(RacahGen::OmegaB)));
  CHECK(is_central(al * de - Scalar(7) * Om));
  CHECK_FALSE(is_central(A));
  CHECK_FALSE(is_central(A * B));
  CHECK_FALSE(is_central(D + al));

  VerificationReport good = check_centrality(Om);
  CHECK(good.all_passed());
  VerificationReport bad = check_centrality(B);
  CHECK_FALSE(bad.all_passed());
}

TEST_CASE("normal forms read back as trees and normalize to themselves") {
  const RacahExpr samples[] = {
      (A + B) * D - Scalar(3) * Om,
      pow(A + de, 3),
      comm(D, A * B) + anticomm(B, C),
      frac(-2, 5) * (C * C * D) + al * be,
  };
  for (const RacahExpr& e : samples) {
    RacahNF u = normalize(e);
    CHECK(normalize(to_expr(u)) == u);
  }
}

TEST_CASE("multiplication of normal forms matches normalization of products") {
  const RacahExpr left[] = {B, D * B, C * A + Scalar(2) * D, pow(B, 2) * al};
  const RacahExpr right[] = {A, A * D, B * C - de, D * A};
  for (const RacahExpr& u : left) {
    for (const RacahExpr& v : right) {
      RacahNF prod = normalize(u) * normalize(v);
      CHECK(prod == normalize(u * v));
      CHECK(embed(prod) == embed(u) * embed(v));
    }
  }
}
