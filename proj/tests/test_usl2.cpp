#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "racah/format.hpp"
#include "racah/usl2.hpp"

using namespace racah;

TEST_CASE("defining relations in the ordered basis") {
  const USl2Element e = gen_e(), h = gen_h(), f = gen_f();
  CHECK(commutator(h, e) == Scalar(2) * e);
  CHECK(commutator(h, f) == Scalar(-2) * f);
  CHECK(commutator(e, f) == h);
}

TEST_CASE("product straightening matches the word oracle") {
  const USl2Element e = gen_e(), h = gen_h(), f = gen_f();
  CHECK(f * e == pbw_from_word("fe"));
  CHECK(h * e == pbw_from_word("he"));
  CHECK(f * h == pbw_from_word("fh"));
  CHECK(f * f * h * h * e * e == pbw_from_word("ffhhee"));
  CHECK(f * e * f * e == pbw_from_word("fefe"));
  CHECK((f * e) * (h * e) == pbw_from_word("fehe"));
  // Associativity on a straightening-heavy word.
  USl2Element left = ((f * e) * f) * e;
  USl2Element right = f * (e * (f * e));
  CHECK(left == right);
}

TEST_CASE("powers of single generators stay monomial") {
  CHECK(power(gen_e(), 5, pbw(0, 0, 0)) == pbw(5, 0, 0));
  CHECK(power(gen_h(), 4, pbw(0, 0, 0)) == pbw(0, 4, 0));
  CHECK(power(gen_f(), 3, pbw(0, 0, 0)) == pbw(0, 0, 3));
  CHECK_THROWS(power(gen_e(), -1, pbw(0, 0, 0)));
}

TEST_CASE("equitable generators and their relations") {
  const USl2Element x = equitable_x(), y = equitable_y(), z = equitable_z();
  CHECK(commutator(x, y) == x + y);
  CHECK(commutator(y, z) == y + z);
  CHECK(commutator(z, x) == z + x);
  CHECK(gen_e() == y + z);
  CHECK(gen_f() == -x - y);
  CHECK(gen_h() == Scalar(2) * y);
}

TEST_CASE("the cubic invariant w in the ordered basis") {
  // Frozen expansion; every coefficient checked against the monomial map.
  std::map<PBWMonomial, Scalar> expected = {
      {{1, 2, 0}, frac(-1, 4)}, {{1, 1, 1}, frac(-1, 2)}, {{1, 1, 0}, frac(-1, 2)},
      {{1, 0, 1}, Scalar(-1)},  {{0, 3, 0}, frac(1, 8)},  {{0, 2, 1}, frac(1, 4)},
      {{0, 2, 0}, frac(1, 4)},  {{0, 1, 1}, frac(1, 2)},
  };
  USl2Element w = w_element();
  CHECK(w.term_count() == expected.size());
  for (const auto& [m, c] : expected) CHECK(w.coeff(m) == c);

  const USl2Element x = equitable_x(), y = equitable_y(), z = equitable_z();
  CHECK(w == x * y * z - x * z);
  CHECK(w == y * x * z + y * z);
}

TEST_CASE("casimir element and its centrality") {
  const USl2Element lam = casimir();
  CHECK(lam == pbw(1, 0, 1) + pbw(0, 2, 0, frac(1, 4)) + pbw(0, 1, 0, frac(-1, 2)));
  CHECK(commutator(lam, gen_e()).is_zero());
  CHECK(commutator(lam, gen_h()).is_zero());
  CHECK(commutator(lam, gen_f()).is_zero());
  CHECK(commutator(lam, w_element()).is_zero());
}

TEST_CASE("grading by f-count minus e-count") {
  CHECK(PBWMonomial{2, 1, 0}.degree() == -2);
  USl2Element u = pbw(1, 0, 3) + pbw(0, 1, 2, frac(1, 2)) + pbw(2, 0, 1);
  CHECK(grade_project(u, 2) == pbw(1, 0, 3) + pbw(0, 1, 2, frac(1, 2)));
  CHECK(grade_project(u, -1) == pbw(2, 0, 1));
  CHECK(grade_project(u, 5).is_zero());
  auto parts = grade_decompose(u);
  CHECK(parts.size() == 2);
  USl2Element sum;
  for (const auto& [n, comp] : parts) {
    CHECK(is_homogeneous(comp, n));
    sum += comp;
  }
  CHECK(sum == u);
  CHECK(degree_span(u) == std::pair<std::int32_t, std::int32_t>{-1, 2});
  CHECK(is_homogeneous(casimir(), 0));
  // w mixes degrees because z does: its support spans one step either way.
  CHECK_FALSE(is_homogeneous(w_element(), 0));
  CHECK(degree_span(w_element()) == std::pair<std::int32_t, std::int32_t>{-1, 1});
}

TEST_CASE("product identity for e^i f^i") {
  for (std::int32_t i = 0; i <= 6; ++i) {
    auto [lhs, rhs] = ef_power_identity(i);
    CHECK(lhs == rhs);
    CHECK(lhs == pbw(i, 0, 0) * pbw(0, 0, i));
  }
}

TEST_CASE("word oracle handles empty and single-letter words") {
  CHECK(pbw_from_word("") == pbw(0, 0, 0));
  CHECK(pbw_from_word("e") == gen_e());
  CHECK_THROWS(pbw_from_word("q"));
}

TEST_CASE("rendering round-trips through descending monomial order") {
  USl2Element u = pbw(1, 1, 1, frac(-3, 2)) + pbw(0, 2, 0) + pbw(0, 0, 1, Scalar(5));
  CHECK(to_text(u) == "-3/2 e h f + h^2 + 5 f");
  CHECK(to_text(USl2Element{}) == "0");
  CHECK(to_text(pbw(0, 0, 0, frac(1, 3))) == "1/3");
}
