#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <racah/embedding.hpp>
#include <racah/format.hpp>
#include <racah/parse.hpp>
#include <racah/racah_nf.hpp>

using namespace racah;

namespace {

RacahExpr g(RacahGen x) { return RacahExpr::gen(x); }

}  // namespace

TEST_CASE("printed abstract elements reparse to the same normal form") {
  const char* inputs[] = {
      "A",          "B*A",           "[A, B] - 2 D", "{A, B}", "OmegaB",
      "3/4 A^2 B - alpha", "D^2 + gamma", "C (A + delta)",
  };
  for (const char* s : inputs) {
    CAPTURE(s);
    RacahNF u = normalize(parse_racah(s));
    CHECK(normalize(parse_racah(to_text(u))) == u);
  }
}

TEST_CASE("printed tensor elements reparse to the same element") {
  const TensorElement samples[] = {
      embed(g(RacahGen::A)),
      lift(w_element()),
      t_a() * lift(casimir()) - tensor_unit(),
      lift(equitable_x() * equitable_y()) + t_b() * t_c(),
  };
  for (const TensorElement& u : samples) {
    CAPTURE(to_text(u));
    CHECK(parse_tensor(to_text(u)) == u);
  }
}

TEST_CASE("operator precedence and sugar follow the usual conventions") {
  const RacahExpr A = g(RacahGen::A), B = g(RacahGen::B), C = g(RacahGen::C);
  CHECK(normalize(parse_racah("A + B C")) == normalize(A + B * C));
  CHECK(normalize(parse_racah("2 A B")) == normalize(Scalar(2) * (A * B)));
  CHECK(normalize(parse_racah("A^2 B")) == normalize(pow(A, 2) * B));
  CHECK(normalize(parse_racah("-A^2 + 1")) ==
        normalize(RacahExpr::constant(Scalar(1)) - pow(A, 2)));
  CHECK(normalize(parse_racah("[A, B]")) == normalize(comm(A, B)));
  CHECK(normalize(parse_racah("{A, B}")) == normalize(anticomm(A, B)));
  CHECK(normalize(parse_racah("(A + B) C")) == normalize((A + B) * C));
  CHECK(normalize(parse_racah("[A, B] - 2 D")).is_zero());
}

TEST_CASE("the three product spellings agree in the tensor language") {
  TensorElement expected = t_a() * lift(gen_h());
  CHECK(parse_tensor("a ox h") == expected);
  CHECK(parse_tensor("a ⊗ h") == expected);
  CHECK(parse_tensor("a * h") == expected);
  CHECK(parse_tensor("a h") == expected);
}

TEST_CASE("rational literals are read exactly and canonically") {
  CHECK(normalize(parse_racah("3/4")).coeff(RacahMonomial{}) == frac(3, 4));
  CHECK(normalize(parse_racah("5/10 A")).coeff(RacahMonomial{1, 0, 0, 0, 0, 0, 0}) ==
        frac(1, 2));
  CHECK(normalize(parse_racah("-7")).coeff(RacahMonomial{}) == Scalar(-7));
}

TEST_CASE("the language of an input is decided by its identifiers") {
  CHECK(std::holds_alternative<RacahExpr>(parse_input("A + delta")));
  CHECK(std::holds_alternative<TensorElement>(parse_input("Lambda + w")));
  // Pure constants default to the abstract language.
  CHECK(std::holds_alternative<RacahExpr>(parse_input("3/4")));
  CHECK_THROWS_AS(parse_racah("e h f"), ParseError);
  CHECK_THROWS_AS(parse_tensor("A B"), ParseError);
}

TEST_CASE("malformed input is rejected with a position") {
  const char* bad[] = {
      "A +", "(A", "A @ B", "foo", "A x", "A ^ -2", "[A B]", "", "A^9999999",
  };
  for (const char* s : bad) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_input(s), ParseError);
  }
  try {
    parse_input("A @ B");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
}

TEST_CASE("plain text rendering is frozen") {
  CHECK(to_text(USl2Element{}) == "0");
  CHECK(to_text(pbw(0, 0, 0)) == "1");
  CHECK(to_text(pbw(1, 2, 3) + pbw(0, 0, 1, frac(-1, 3))) == "e h^2 f^3 - 1/3 f");
  CHECK(to_text(tensor_term(AbcMonomial{1, 0, 2}, gen_h(), Scalar(-2))) == "-2 a c^2 ⊗ h");
  CHECK(to_text(normalize(parse_racah("B A"))) == "A B - 2 D");
}

TEST_CASE("latex rendering is frozen") {
  CHECK(to_latex(USl2Element{}) == "0");
  CHECK(to_latex(pbw(0, 2, 0, frac(-1, 4))) == "-\\frac{1}{4} h^{2}");
  CHECK(to_latex(normalize(g(RacahGen::Alpha) * g(RacahGen::Delta))) == "\\alpha \\delta");
  CHECK(to_latex(normalize(parse_racah("B A"))) == "A B - 2 D");
  CHECK(to_latex(tensor_term(AbcMonomial{0, 1, 0}, gen_f(), frac(1, 2))) ==
        "\\frac{1}{2} b \\otimes f");
}

TEST_CASE("json terms carry exponents and exact coefficients") {
  nlohmann::json j = to_json(normalize(parse_racah("B A")));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["D"] == 1);
  CHECK(j[0]["coeff"] == "-2");
  CHECK(j[1]["A"] == 1);
  CHECK(j[1]["B"] == 1);
  CHECK(j[1]["coeff"] == "1");

  nlohmann::json t = to_json(t_a() * lift(gen_e()));
  REQUIRE(t.is_array());
  CHECK(t[0]["abc"]["a"] == 1);
  CHECK(t[0]["pbw"]["e"] == 1);
}

TEST_CASE("verification reports render to text and json") {
  VerificationReport r = check_centrality(g(RacahGen::OmegaA));
  nlohmann::json j = to_json(r);
  CHECK(j["passed"] == true);
  CHECK(j["failed"] == 0);
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() == r.checks.size());

  std::string verbose = report_to_text(r, true);
  CHECK(verbose.find("[PASS]") != std::string::npos);
  std::string quiet = report_to_text(r, false);
  CHECK(quiet.find("[PASS]") == std::string::npos);
  CHECK(quiet.find("checks passed") != std::string::npos);

  VerificationReport bad = check_centrality(g(RacahGen::A));
  CHECK(report_to_text(bad, false).find("[FAIL]") != std::string::npos);
}
