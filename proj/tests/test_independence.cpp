#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <racah/independence.hpp>

using namespace racah;

TEST_CASE("the distinguished quartet has the advertised leading monomials") {
  auto ys = y_system();

  // y1 is cubic with leading monomial x1^2 x2, the rest lead with x1^s etc.
  CHECK(leading_monomial(ys[0]) == QuadMonomial{2, 1, 0, 0});
  CHECK(leading_coefficient(ys[0]) == Scalar(1));
  CHECK(leading_monomial(ys[1]) == QuadMonomial{1, 0, 1, 0});
  CHECK(leading_monomial(ys[2]) == QuadMonomial{1, 0, 0, 1});
  CHECK(leading_monomial(ys[3]) == QuadMonomial{1, 0, 0, 0});
  for (const QuadPoly& y : ys) CHECK(leading_coefficient(y) == Scalar(1));

  // The rank functional separates every monomial that occurs in the system.
  CHECK(QuadMonomial{2, 1, 0, 0}.rank_value() == 11);
  CHECK(QuadMonomial{1, 0, 1, 0}.rank_value() == 8);
  CHECK(QuadMonomial{1, 0, 0, 1}.rank_value() == 7);
  CHECK(QuadMonomial{1, 0, 0, 0}.rank_value() == 5);

  // Degenerate inputs are rejected instead of returning garbage.
  CHECK_THROWS(leading_monomial(QuadPoly{}));
  QuadPoly tied(QuadMonomial{0, 3, 0, 0});  // rank 3 ...
  tied += QuadPoly(QuadMonomial{0, 0, 1, 0});  // ... ties with rank 3
  CHECK_THROWS(leading_monomial(tied));
  QuadPoly offset = quad_var(2) + QuadPoly(QuadMonomial{});
  CHECK(leading_monomial(offset) == QuadMonomial{0, 1, 0, 0});
}

TEST_CASE("products of the quartet obey the leading-monomial law") {
  QuadPoly p = power(y_system()[0], 2, QuadPoly(QuadMonomial{})) * y_system()[3];
  // Leading monomial of y1^2 y4: x1^{2*2+0+0+1} x2^2.
  CHECK(leading_monomial(p) == QuadMonomial{5, 2, 0, 0});
  CHECK(leading_coefficient(p) == Scalar(1));

  CHECK(verify_leading_monomial_law(1).all_passed());
  CHECK(verify_leading_monomial_law(2).all_passed());
}

TEST_CASE("monomials in the diagonal shift and the central images are independent") {
  VerificationReport r = verify_theta_independence(2);
  CHECK(r.all_passed());
  CHECK(r.failed_count() == 0);
}

TEST_CASE("low caps already certify injectivity on the spanned block") {
  InjectivityOptions opt;
  opt.caps = {1, 1, 1, 0, 0, 0, 0};
  InjectivityCertificate cert = injectivity_certificate(opt);
  CHECK(cert.dimension == 8);
  CHECK(cert.rank == 8);
  CHECK(cert.injective);
  CHECK(cert.caps == opt.caps);
  CHECK(cert.elapsed_seconds >= 0.0);

  nlohmann::json j = to_json(cert);
  CHECK(j["dimension"] == 8);
  CHECK(j["rank"] == 8);
  CHECK(j["injective"] == true);
}

TEST_CASE("the certificate refuses basis blocks beyond the configured budget") {
  InjectivityOptions opt;
  opt.caps = {3, 1, 3, 2, 2, 2, 2};
  opt.limit = 10;
  CHECK_THROWS(injectivity_certificate(opt));
}
