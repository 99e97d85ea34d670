#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <racah/embedding.hpp>
#include <racah/format.hpp>
#include <racah/racah_nf.hpp>
#include <racah/tensor.hpp>

using namespace racah;

namespace {

RacahExpr g(RacahGen x) { return RacahExpr::gen(x); }

const TensorElement& im(RacahGen x) { return gen_image(x); }

}  // namespace

TEST_CASE("the image of the first generator matches its closed form term by term") {
  const TensorElement& a = im(RacahGen::A);

  TensorElement expected = tensor_term(AbcMonomial{2, 0, 0}, pbw(0, 0, 0));
  expected += tensor_term(AbcMonomial{1, 0, 0}, gen_h() + gen_f() + pbw(0, 0, 0));
  expected += tensor_term(AbcMonomial{0, 1, 0}, gen_f(), Scalar(-1));
  expected += tensor_term(AbcMonomial{0, 0, 1}, gen_f());
  expected += tensor_term(AbcMonomial{0, 0, 0},
                          pbw(0, 2, 0, frac(1, 4)) + pbw(0, 1, 1, frac(1, 2)) +
                              pbw(0, 1, 0, frac(1, 2)) + pbw(0, 0, 1));
  CAPTURE(to_text(a));
  CHECK(a == expected);
  CHECK(a.term_count() == 10);

  std::set<AbcMonomial> support{{2, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(abc_support(a) == support);
  CHECK(coeff_abc(a, AbcMonomial{0, 1, 0}) == -gen_f());
  CHECK(degree_span_tensor(a) == std::pair<std::int32_t, std::int32_t>{0, 1});
}

TEST_CASE("generator images satisfy the defining relations") {
  TensorElement two_d = Scalar(2) * im(RacahGen::D);
  CHECK(commutator(im(RacahGen::A), im(RacahGen::B)) == two_d);
  CHECK(commutator(im(RacahGen::B), im(RacahGen::C)) == two_d);
  CHECK(commutator(im(RacahGen::C), im(RacahGen::A)) == two_d);

  // The linear relations among the generators carry over.
  CHECK(im(RacahGen::A) + im(RacahGen::B) + im(RacahGen::C) == im(RacahGen::Delta));
  CHECK(im(RacahGen::Gamma) == -(im(RacahGen::Alpha) + im(RacahGen::Beta)));

  VerificationReport hom = verify_homomorphism();
  CHECK(hom.all_passed());
  CHECK(hom.failed_count() == 0);
}

TEST_CASE("central generators map to central elements") {
  for (RacahGen c : {RacahGen::Alpha, RacahGen::Beta, RacahGen::Gamma, RacahGen::Delta,
                     RacahGen::OmegaA, RacahGen::OmegaB, RacahGen::OmegaC}) {
    CAPTURE(gen_name(c));
    for (RacahGen x : {RacahGen::A, RacahGen::B, RacahGen::C, RacahGen::D}) {
      CHECK(commutator(im(c), im(x)).is_zero());
    }
  }
  CHECK(verify_casimir_images().all_passed());
}

TEST_CASE("graded components of images and their products match the tables") {
  CHECK(verify_homogeneous_tables(2, 2).all_passed());
  // Images concentrate in the three middle degrees.
  for (RacahGen x : {RacahGen::A, RacahGen::B, RacahGen::C, RacahGen::D}) {
    auto [lo, hi] = degree_span_tensor(im(x));
    CHECK(lo >= -1);
    CHECK(hi <= 1);
  }
}

TEST_CASE("basis monomials embed as the ordered product of generator images") {
  TensorElement expected = im(RacahGen::A) * im(RacahGen::D) * im(RacahGen::B) *
                           im(RacahGen::OmegaA) * im(RacahGen::Alpha) * im(RacahGen::Delta) *
                           im(RacahGen::Beta);
  CHECK(embed_basis(RacahMonomial{1, 1, 1, 1, 1, 1, 1}) == expected);
  CHECK(embed_basis(RacahMonomial{}) == tensor_unit());
  CHECK(embed_basis(RacahMonomial{0, 1, 0, 0, 0, 0, 0}) == im(RacahGen::D));
}

TEST_CASE("evaluating a tree and embedding its normal form give the same element") {
  const RacahExpr A = g(RacahGen::A), B = g(RacahGen::B), C = g(RacahGen::C),
                  D = g(RacahGen::D);
  const RacahExpr fixed[] = {
      B * A,
      D * D - g(RacahGen::OmegaA),
      comm(D, A * B) + anticomm(C, B),
      pow(A + B, 3) - g(RacahGen::Alpha) * C,
  };
  for (const RacahExpr& e : fixed) {
    CAPTURE(to_text(e));
    CHECK(embed(normalize(e)) == embed(e));
  }
  for (const RacahExpr& e : random_racah_exprs(10, 0xE3BEDull)) {
    CAPTURE(to_text(e));
    CHECK(embed(normalize(e)) == embed(e));
  }
}
