#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <racah/embedding.hpp>
#include <racah/rep.hpp>

using namespace racah;

namespace {

RationalMatrix act(const USl2Element& u, const IrrepMatrices& rep) {
  return evaluate(lift(u), rep, EvaluationPoint{Scalar(0), Scalar(0), Scalar(0)});
}

}  // namespace

TEST_CASE("matrix arithmetic behaves like matrices") {
  RationalMatrix m(2);
  m.at(0, 1) = Scalar(3);
  RationalMatrix id = RationalMatrix::identity(2);
  CHECK((m * m).is_zero());
  CHECK(m * id == m);
  CHECK(id * m == m);
  CHECK(m + m == Scalar(2) * m);
  CHECK((m - m).is_zero());
  CHECK_FALSE(m == id);
}

TEST_CASE("the five-dimensional representation satisfies the defining relations") {
  IrrepMatrices rep = build_irrep(5);
  CHECK(rep.e.size() == 5);
  CHECK(rep.h.at(0, 0) == Scalar(4));
  CHECK(rep.h.at(4, 4) == Scalar(-4));
  CHECK(rep.f.at(1, 0) == Scalar(1));
  CHECK(rep.e.at(0, 1) == Scalar(4));  // m(d-m) at m=1

  CHECK(rep.h * rep.e - rep.e * rep.h == Scalar(2) * rep.e);
  CHECK(rep.h * rep.f - rep.f * rep.h == Scalar(-2) * rep.f);
  CHECK(rep.e * rep.f - rep.f * rep.e == rep.h);

  // Nilpotency at the edge of the weight ladder.
  RationalMatrix epow = rep.e, fpow = rep.f;
  for (int i = 1; i < 5; ++i) {
    epow = epow * rep.e;
    fpow = fpow * rep.f;
  }
  CHECK(epow.is_zero());
  CHECK(fpow.is_zero());
}

TEST_CASE("the casimir element acts by the expected scalar in every dimension") {
  for (std::int32_t d = 1; d <= 6; ++d) {
    IrrepMatrices rep = build_irrep(d);
    Scalar expected = frac((long)d * d - 1, 4);
    CHECK(act(casimir(), rep) == expected * RationalMatrix::identity(d));
  }
}

TEST_CASE("dimension guards reject degenerate requests") {
  CHECK_THROWS(build_irrep(0));
  CHECK_THROWS(build_irrep(-3));
  CHECK_THROWS(build_irrep(513));
}

TEST_CASE("evaluation is multiplicative and respects the polynomial part") {
  IrrepMatrices rep = build_irrep(4);
  EvaluationPoint pt{frac(1, 2), Scalar(-2), frac(5, 3)};

  // a^2 b (x) 1 evaluates to the scalar a^2 b.
  TensorElement u = t_a() * t_a() * t_b();
  CHECK(evaluate(u, rep, pt) == (pt.a * pt.a * pt.b) * RationalMatrix::identity(4));

  TensorElement p = embed(RacahExpr::gen(RacahGen::A));
  TensorElement q = embed(RacahExpr::gen(RacahGen::D));
  CHECK(evaluate(p * q, rep, pt) == evaluate(p, rep, pt) * evaluate(q, rep, pt));
}

TEST_CASE("sampling is deterministic for a fixed seed") {
  auto p1 = sample_points(4, 99);
  auto p2 = sample_points(4, 99);
  REQUIRE(p1.size() == 4);
  for (std::size_t i = 0; i < p1.size(); ++i) {
    CHECK(p1[i].a == p2[i].a);
    CHECK(p1[i].b == p2[i].b);
    CHECK(p1[i].c == p2[i].c);
  }
  auto p3 = sample_points(4, 100);
  bool all_equal = true;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    all_equal = all_equal && p1[i].a == p3[i].a && p1[i].b == p3[i].b && p1[i].c == p3[i].c;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("the oracle validates small dimensions at random points") {
  VerificationReport r = oracle_check_relations({1, 2, 3}, sample_points(2, 7));
  CHECK(r.all_passed());
  CHECK(r.failed_count() == 0);
}
