#include "racah/independence.hpp"

#include <chrono>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "racah/embedding.hpp"
#include "racah/format.hpp"
#include "racah/linalg.hpp"
#include "racah/tensor.hpp"
#include "racah/usl2.hpp"

namespace racah {

namespace {

constexpr std::int32_t kMaxExponent = 1 << 20;

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int64_t s = std::int64_t(a) + b;
  if (s < 0 || s > kMaxExponent) throw std::overflow_error("quad exponent out of range");
  return std::int32_t(s);
}

}  // namespace

QuadPoly quad_var(int index) {
  QuadMonomial m{};
  switch (index) {
    case 1: m.x1 = 1; break;
    case 2: m.x2 = 1; break;
    case 3: m.x3 = 1; break;
    case 4: m.x4 = 1; break;
    default: throw std::domain_error("quad_var: index must be 1..4");
  }
  return QuadPoly(m, Scalar(1));
}

QuadPoly operator*(const QuadPoly& u, const QuadPoly& v) {
  QuadPoly out;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      QuadMonomial m{checked_add(mu.x1, mv.x1), checked_add(mu.x2, mv.x2),
                     checked_add(mu.x3, mv.x3), checked_add(mu.x4, mv.x4)};
      out.add(m, cu * cv);
    }
  }
  return out;
}

std::array<QuadPoly, 4> y_system() {
  const QuadPoly x1 = quad_var(1), x2 = quad_var(2), x3 = quad_var(3), x4 = quad_var(4);
  QuadPoly y1 = (x1 + x2 - x3 - x4) * (x1 * x2 - x3 * x4) - (x1 + x2) * (x3 + x4);
  QuadPoly y2 = (x1 - x2) * (x3 - x4);
  QuadPoly y3 = (x1 - x3) * (x4 - x2);
  QuadPoly y4 = x1 + x2 + x3 + x4;
  return {y1, y2, y3, y4};
}

QuadMonomial leading_monomial(const QuadPoly& p) {
  if (p.is_zero()) throw std::domain_error("leading_monomial: zero polynomial");
  bool have = false;
  QuadMonomial best{};
  long best_rank = 0;
  bool tie = false;
  for (const auto& [m, c] : p.terms()) {
    long r = m.rank_value();
    if (!have || r > best_rank) {
      best = m;
      best_rank = r;
      have = true;
      tie = false;
    } else if (r == best_rank) {
      tie = true;
    }
  }
  if (tie) throw std::domain_error("leading_monomial: rank tie between distinct monomials");
  return best;
}

Scalar leading_coefficient(const QuadPoly& p) { return p.coeff(leading_monomial(p)); }

namespace {

Scalar eval_quad_at(const QuadPoly& p, const std::array<Scalar, 4>& pt) {
  auto mono_pow = [](const Scalar& base, std::int32_t n) {
    Scalar acc(1);
    for (std::int32_t i = 0; i < n; ++i) acc *= base;
    return acc;
  };
  Scalar sum(0);
  for (const auto& [m, c] : p.terms()) {
    sum += c * mono_pow(pt[0], m.x1) * mono_pow(pt[1], m.x2) * mono_pow(pt[2], m.x3) *
           mono_pow(pt[3], m.x4);
  }
  return sum;
}

TensorElement eval_quad_tensor(const QuadPoly& p, const std::array<TensorElement, 4>& sub) {
  TensorElement sum;
  const TensorElement one = tensor_unit();
  for (const auto& [m, c] : p.terms()) {
    TensorElement term = c * one;
    term = term * power(sub[0], m.x1, one);
    term = term * power(sub[1], m.x2, one);
    term = term * power(sub[2], m.x3, one);
    term = term * power(sub[3], m.x4, one);
    sum += term;
  }
  return sum;
}

}  // namespace

VerificationReport verify_leading_monomial_law(int max_exp) {
  VerificationReport rep;
  rep.suite = "independence/leading-monomial";
  if (max_exp < 0) throw std::domain_error("verify_leading_monomial_law: negative bound");

  const auto ys = y_system();

  // Frozen spot checks of the building blocks.
  rep.check("lead/y2", "second polynomial matches its expansion",
            ys[1] == quad_var(1) * quad_var(3) - quad_var(1) * quad_var(4) -
                         quad_var(2) * quad_var(3) + quad_var(2) * quad_var(4));
  rep.check("lead/rank-y2-top", "rank of x1 x3 is 8",
            QuadMonomial{1, 0, 1, 0}.rank_value() == 8);
  rep.check("lead/rank-y2-bottom", "rank of x2 x4 is 3",
            QuadMonomial{0, 1, 0, 1}.rank_value() == 3);
  rep.check("lead/y2-lead", "leading monomial of the second polynomial is x1 x3",
            leading_monomial(ys[1]) == QuadMonomial{1, 0, 1, 0});

  std::vector<std::vector<QuadPoly>> pows(4);
  for (int v = 0; v < 4; ++v) {
    pows[v].push_back(QuadPoly(QuadMonomial{}, Scalar(1)));
    for (int n = 1; n <= max_exp; ++n) pows[v].push_back(pows[v].back() * ys[v]);
  }

  std::mt19937_64 rng(0x1ead1e55u);
  std::uniform_int_distribution<long> val(-9, 9);

  for (int rr = 0; rr <= max_exp; ++rr)
    for (int ss = 0; ss <= max_exp; ++ss)
      for (int tt = 0; tt <= max_exp; ++tt)
        for (int uu = 0; uu <= max_exp; ++uu) {
          QuadPoly prod = pows[0][rr] * pows[1][ss] * pows[2][tt] * pows[3][uu];
          std::string tag = std::to_string(rr) + std::to_string(ss) + std::to_string(tt) +
                            std::to_string(uu);
          QuadMonomial expected{2 * rr + ss + tt + uu, rr, ss, tt};
          bool lead_ok = false, coeff_ok = false, solved_ok = false;
          std::string witness;
          try {
            QuadMonomial lead = leading_monomial(prod);
            lead_ok = lead == expected;
            coeff_ok = prod.coeff(lead) == 1;
            // Solve the exponent vector back from the leading monomial.
            long r2 = lead.x2, s2 = lead.x3, t2 = lead.x4;
            long u2 = lead.x1 - 2L * lead.x2 - lead.x3 - lead.x4;
            solved_ok = r2 == rr && s2 == ss && t2 == tt && u2 == uu && u2 >= 0;
            if (!lead_ok) witness = "unexpected leading monomial";
          } catch (const std::exception& ex) {
            witness = ex.what();
          }
          rep.check("lead/product-" + tag,
                    "leading monomial of the power product " + tag + " is as predicted",
                    lead_ok && coeff_ok, witness);
          rep.check("lead/solve-" + tag,
                    "exponents recovered from the leading monomial " + tag, solved_ok, witness);

          // Numeric cross-check of the expansion at a random point.
          std::array<Scalar, 4> pt{Scalar(val(rng)), Scalar(val(rng)), Scalar(val(rng)),
                                   Scalar(val(rng))};
          Scalar direct(1);
          for (int n = 0; n < rr; ++n) direct *= eval_quad_at(ys[0], pt);
          for (int n = 0; n < ss; ++n) direct *= eval_quad_at(ys[1], pt);
          for (int n = 0; n < tt; ++n) direct *= eval_quad_at(ys[2], pt);
          for (int n = 0; n < uu; ++n) direct *= eval_quad_at(ys[3], pt);
          rep.check("lead/eval-" + tag, "expansion " + tag + " evaluates consistently",
                    eval_quad_at(prod, pt) == direct);
        }
  return rep;
}

VerificationReport verify_theta_independence(int max_total_degree) {
  VerificationReport rep;
  rep.suite = "independence/theta";
  if (max_total_degree < 0) throw std::domain_error("verify_theta_independence: negative bound");

  const TensorElement th = structural_theta();
  const TensorElement om = gen_image(RacahGen::OmegaA);
  const TensorElement al = gen_image(RacahGen::Alpha);
  const TensorElement be = gen_image(RacahGen::Beta);
  const TensorElement de = gen_image(RacahGen::Delta);
  const TensorElement one = tensor_unit();

  // Substitution consistency: the central images are the y-system evaluated
  // at the Casimir and the three polynomial squares.
  const std::array<TensorElement, 4> sub{
      lift(casimir()), t_a() * (t_a() + one), t_b() * (t_b() + one), t_c() * (t_c() + one)};
  const auto ys = y_system();
  expect_equal(rep, "theta/subst-casimir",
               "the Casimir image is the cubic of the y-system under substitution",
               eval_quad_tensor(ys[0], sub), om);
  expect_equal(rep, "theta/subst-alpha",
               "image(alpha) is the first difference product under substitution",
               eval_quad_tensor(ys[1], sub), al);
  expect_equal(rep, "theta/subst-beta",
               "image(beta) is the second difference product under substitution",
               eval_quad_tensor(ys[2], sub), be);
  expect_equal(rep, "theta/subst-delta", "image(delta) is the variable sum under substitution",
               eval_quad_tensor(ys[3], sub), de);

  const std::pair<const char*, TensorElement> families[2] = {
      {"theta", th}, {"vartheta", structural_vartheta()}};
  for (const auto& [name, diag] : families) {
    const TensorElement* base[5] = {&diag, &om, &al, &be, &de};
    std::vector<std::vector<TensorElement>> pows(5);
    for (int v = 0; v < 5; ++v) {
      pows[v].push_back(one);
      for (int n = 1; n <= max_total_degree; ++n) pows[v].push_back(pows[v].back() * (*base[v]));
    }

    std::vector<TensorElement> vectors;
    for (int n = 0; n <= max_total_degree; ++n)
      for (int l = 0; n + l <= max_total_degree; ++l)
        for (int a = 0; n + l + a <= max_total_degree; ++a)
          for (int b = 0; n + l + a + b <= max_total_degree; ++b)
            for (int d = 0; n + l + a + b + d <= max_total_degree; ++d)
              vectors.push_back(pows[0][n] * pows[1][l] * pows[2][a] * pows[3][b] * pows[4][d]);

    std::size_t rk = rank_of(vectors);
    rep.check(std::string("theta/rank-") + name,
              std::string("monomials in ") + name + " and the central images up to degree " +
                  std::to_string(max_total_degree) + " are linearly independent",
              rk == vectors.size(),
              rk == vectors.size() ? ""
                                   : "rank " + std::to_string(rk) + " of " +
                                         std::to_string(vectors.size()));
  }
  return rep;
}

InjectivityCertificate injectivity_certificate(const InjectivityOptions& opt) {
  for (std::int32_t c : opt.caps)
    if (c < 0) throw std::domain_error("injectivity_certificate: negative cap");
  const std::int32_t dcap = std::min<std::int32_t>(opt.caps[1], 1);

  std::size_t count = 1;
  const std::size_t sizes[7] = {std::size_t(opt.caps[0]) + 1, std::size_t(dcap) + 1,
                                std::size_t(opt.caps[2]) + 1, std::size_t(opt.caps[3]) + 1,
                                std::size_t(opt.caps[4]) + 1, std::size_t(opt.caps[5]) + 1,
                                std::size_t(opt.caps[6]) + 1};
  for (std::size_t s : sizes) {
    if (count > opt.limit / s + 1) {
      count = opt.limit + 1;
      break;
    }
    count *= s;
  }
  if (count > opt.limit)
    throw std::domain_error("injectivity_certificate: monomial count exceeds the limit of " +
                            std::to_string(opt.limit));

  auto start = std::chrono::steady_clock::now();
  std::vector<TensorElement> vectors;
  vectors.reserve(count);
  for (std::int32_t i = 0; i <= opt.caps[0]; ++i)
    for (std::int32_t j = 0; j <= dcap; ++j)
      for (std::int32_t k = 0; k <= opt.caps[2]; ++k)
        for (std::int32_t l = 0; l <= opt.caps[3]; ++l)
          for (std::int32_t rr = 0; rr <= opt.caps[4]; ++rr)
            for (std::int32_t ss = 0; ss <= opt.caps[5]; ++ss)
              for (std::int32_t tt = 0; tt <= opt.caps[6]; ++tt) {
                RacahMonomial m{i, j, k, l, rr, ss, tt};
                vectors.push_back(embed_basis(m));
              }

  InjectivityCertificate cert;
  cert.caps = opt.caps;
  cert.caps[1] = dcap;
  cert.dimension = vectors.size();
  cert.rank = rank_of(vectors);
  cert.injective = cert.rank == cert.dimension;
  cert.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

nlohmann::json to_json(const InjectivityCertificate& c) {
  return {{"caps",
           {{"A", c.caps[0]},
            {"D", c.caps[1]},
            {"B", c.caps[2]},
            {"Omega", c.caps[3]},
            {"alpha", c.caps[4]},
            {"delta", c.caps[5]},
            {"beta", c.caps[6]}}},
          {"dimension", c.dimension},
          {"rank", c.rank},
          {"injective", c.injective},
          {"elapsed_seconds", c.elapsed_seconds}};
}

}  // namespace racah
