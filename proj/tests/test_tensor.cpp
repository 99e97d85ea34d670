#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racah/format.hpp"
#include "racah/tensor.hpp"

using namespace racah;

TEST_CASE("commutative factor really commutes") {
  TensorElement u = t_a() * lift(gen_e()) * t_b();
  TensorElement v = t_b() * t_a() * lift(gen_e());
  CHECK(u == v);
  CHECK(t_a() * t_b() * t_c() == t_c() * t_b() * t_a());
}

TEST_CASE("mixed products straighten the enveloping factor only") {
  TensorElement u = (t_a() * lift(gen_f())) * (t_b() * lift(gen_e()));
  // f e = e f - h on the right factor, a b on the left.
  TensorElement expected =
      tensor_term(AbcMonomial{1, 1, 0}, pbw(1, 0, 1) - pbw(0, 1, 0));
  CHECK(u == expected);
}

TEST_CASE("coefficient extraction by commutative monomial") {
  TensorElement u = tensor_term(AbcMonomial{2, 0, 1}, gen_h(), frac(1, 2)) +
                    tensor_term(AbcMonomial{0, 0, 0}, casimir());
  CHECK(coeff_abc(u, AbcMonomial{2, 0, 1}) == frac(1, 2) * gen_h());
  CHECK(coeff_abc(u, AbcMonomial{0, 0, 0}) == casimir());
  CHECK(coeff_abc(u, AbcMonomial{1, 1, 1}).is_zero());
  auto support = abc_support(u);
  CHECK(support.size() == 2);
  CHECK(support.count(AbcMonomial{2, 0, 1}) == 1);
}

TEST_CASE("grading of tensor elements ignores the commutative factor") {
  TensorElement u = t_a() * lift(pbw(0, 0, 2)) + t_b() * lift(pbw(1, 0, 0));
  CHECK(is_homogeneous_tensor(t_a() * lift(pbw(0, 0, 2)), 2));
  CHECK(grade_project_tensor(u, 2) == t_a() * lift(pbw(0, 0, 2)));
  CHECK(grade_project_tensor(u, -1) == t_b() * lift(pbw(1, 0, 0)));
  CHECK(degree_span_tensor(u) == std::pair<std::int32_t, std::int32_t>{-1, 2});
  auto parts = grade_decompose_tensor(u);
  TensorElement sum;
  for (const auto& [n, comp] : parts) sum += comp;
  CHECK(sum == u);
}

TEST_CASE("ladder elements match their defining formulas") {
  const TensorElement one = tensor_unit();
  TensorElement r_expected =
      Scalar(2) * lift(equitable_y() * nu_x()) +
      Scalar(2) * ((t_c() + t_a() - t_b() + one) * lift(nu_x()));
  CHECK(structural_R() == r_expected);
  TensorElement l_expected =
      Scalar(-2) * lift(equitable_y() * nu_z()) -
      Scalar(2) * ((t_a() - t_b() - t_c() - one) * lift(nu_z()));
  CHECK(structural_L() == l_expected);
  CHECK(structural_theta() == lift(equitable_y()) - t_b());
  CHECK(structural_vartheta() == lift(equitable_y()) + t_a());

  CHECK(is_homogeneous_tensor(structural_R(), 1));
  CHECK(is_homogeneous_tensor(structural_L(), -1));
  CHECK(is_homogeneous_tensor(structural_theta(), 0));
  CHECK(is_homogeneous_tensor(structural_vartheta(), 0));
}

TEST_CASE("shift laws of the ladder pair") {
  const TensorElement one = tensor_unit();
  const TensorElement R = structural_R(), L = structural_L();
  const TensorElement th = structural_theta(), vt = structural_vartheta();
  CHECK(commutator(R, th) == R);
  CHECK(commutator(R, vt) == R);
  CHECK(commutator(th, L) == L);
  CHECK(commutator(vt, L) == L);
  CHECK(th * R == R * (th - one));
  CHECK(vt * R == R * (vt - one));
  CHECK(th * L == L * (th + one));
  CHECK(vt * L == L * (vt + one));
}

TEST_CASE("structural law suite passes") {
  VerificationReport r = verify_structural_laws();
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 30);
}

TEST_CASE("tensor rendering uses the product sign") {
  TensorElement u = tensor_term(AbcMonomial{1, 0, 0}, gen_h(), frac(-1, 2));
  CHECK(to_text(u) == "-1/2 a ⊗ h");
  // The unit monomial has nothing on either side, so it prints as a scalar.
  CHECK(to_text(tensor_unit()) == "1");
  CHECK(to_text(Scalar(2) * tensor_unit() + tensor_term(AbcMonomial{0, 0, 1}, gen_e())) ==
        "c ⊗ e + 2");
  CHECK(to_latex(u) == "-\\frac{1}{2} a \\otimes h");
}
