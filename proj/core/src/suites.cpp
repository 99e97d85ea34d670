#include "racah/suites.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "racah/embedding.hpp"
#include "racah/format.hpp"
#include "racah/independence.hpp"
#include "racah/linalg.hpp"
#include "racah/racah_nf.hpp"
#include "racah/rep.hpp"
#include "racah/tensor.hpp"
#include "racah/usl2.hpp"

namespace racah {
namespace {

std::string clip(std::string s, std::size_t n = 160) {
  if (s.size() > n) {
    s.resize(n);
    s += "...";
  }
  return s;
}

// ----------------------------------------------------------------------
// Commutator identities among the equitable generators, the cyclically
// invariant cubic element w, the halved ladder pair, and the Casimir.

VerificationReport suite_equitable(const SuiteOptions&) {
  VerificationReport rep;
  rep.suite = "equitable-commutators";

  const USl2Element x = equitable_x(), y = equitable_y(), z = equitable_z();
  const USl2Element e = gen_e(), h = gen_h(), f = gen_f();

  expect_equal(rep, "eq/def-rel-ehf-1", "h e - e h = 2 e", commutator(h, e), Scalar(2) * e);
  expect_equal(rep, "eq/def-rel-ehf-2", "h f - f h = -2 f", commutator(h, f), Scalar(-2) * f);
  expect_equal(rep, "eq/def-rel-ehf-3", "e f - f e = h", commutator(e, f), h);

  expect_equal(rep, "eq/bracket-xy", "[x, y] = x + y", commutator(x, y), x + y);
  expect_equal(rep, "eq/bracket-yz", "[y, z] = y + z", commutator(y, z), y + z);
  expect_equal(rep, "eq/bracket-zx", "[z, x] = z + x", commutator(z, x), z + x);

  expect_equal(rep, "eq/convert-e", "e = y + z", e, y + z);
  expect_equal(rep, "eq/convert-f", "f = -x - y", f, -x - y);
  expect_equal(rep, "eq/convert-h", "h = 2 y", h, Scalar(2) * y);

  // Brackets of a generator with each of the three ordered pair products.
  expect_equal(rep, "eq/gen-pair-1", "[x, x y] = x^2 + x y", commutator(x, x * y), x * x + x * y);
  expect_equal(rep, "eq/gen-pair-2", "[x, y z] = x z - y x", commutator(x, y * z), x * z - y * x);
  expect_equal(rep, "eq/gen-pair-3", "[x, z x] = -x^2 - z x", commutator(x, z * x),
               -(x * x) - z * x);
  expect_equal(rep, "eq/gen-pair-4", "[y, y z] = y^2 + y z", commutator(y, y * z), y * y + y * z);
  expect_equal(rep, "eq/gen-pair-5", "[y, z x] = y x - z y", commutator(y, z * x), y * x - z * y);
  expect_equal(rep, "eq/gen-pair-6", "[y, x y] = -y^2 - x y", commutator(y, x * y),
               -(y * y) - x * y);
  expect_equal(rep, "eq/gen-pair-7", "[z, z x] = z^2 + z x", commutator(z, z * x), z * z + z * x);
  expect_equal(rep, "eq/gen-pair-8", "[z, x y] = z y - x z", commutator(z, x * y), z * y - x * z);
  expect_equal(rep, "eq/gen-pair-9", "[z, y z] = -z^2 - y z", commutator(z, y * z),
               -(z * z) - y * z);

  // Brackets between the pair products.
  expect_equal(rep, "eq/pair-pair-1", "[x y, y z] = 2 x y z + y^2 - x z",
               commutator(x * y, y * z), Scalar(2) * (x * y * z) + y * y - x * z);
  expect_equal(rep, "eq/pair-pair-2", "[y z, z x] = 2 y z x + z^2 - y x",
               commutator(y * z, z * x), Scalar(2) * (y * z * x) + z * z - y * x);
  expect_equal(rep, "eq/pair-pair-3", "[z x, x y] = 2 z x y + x^2 - z y",
               commutator(z * x, x * y), Scalar(2) * (z * x * y) + x * x - z * y);

  // The six bracketings that define w agree.
  const USl2Element w = w_element();
  expect_equal(rep, "eq/w-form-1", "w = z y x + z x", w, z * y * x + z * x);
  expect_equal(rep, "eq/w-form-2", "w = z x y - z y", w, z * x * y - z * y);
  expect_equal(rep, "eq/w-form-3", "w = y z x - y x", w, y * z * x - y * x);
  expect_equal(rep, "eq/w-form-4", "w = x z y + x y", w, x * z * y + x * y);
  expect_equal(rep, "eq/w-form-5", "w = y x z + y z", w, y * x * z + y * z);
  expect_equal(rep, "eq/w-form-6", "w = x y z - x z", w, x * y * z - x * z);

  expect_equal(rep, "eq/w-gen-1", "[w, x] = x y x - x z x", commutator(w, x),
               x * y * x - x * z * x);
  expect_equal(rep, "eq/w-gen-2", "[w, y] = y z y - y x y", commutator(w, y),
               y * z * y - y * x * y);
  expect_equal(rep, "eq/w-gen-3", "[w, z] = z x z - z y z", commutator(w, z),
               z * x * z - z * y * z);

  expect_equal(rep, "eq/w-pair-1", "[w, x y] = y z x y - x y z x + x y x - y x y",
               commutator(w, x * y), y * z * x * y - x * y * z * x + x * y * x - y * x * y);
  expect_equal(rep, "eq/w-pair-2", "[w, y z] = z x y z - y z x y + y z y - z y z",
               commutator(w, y * z), z * x * y * z - y * z * x * y + y * z * y - z * y * z);
  expect_equal(rep, "eq/w-pair-3", "[w, z x] = x y z x - z x y z + z x z - x z x",
               commutator(w, z * x), x * y * z * x - z * x * y * z + z * x * z - x * z * x);

  // Ladder pair and the Casimir.
  const USl2Element vx = nu_x(), vz = nu_z(), lam = casimir();
  expect_equal(rep, "eq/nu-x", "nu_x = -(x + y)/2", vx, frac(-1, 2) * (x + y));
  expect_equal(rep, "eq/nu-z", "nu_z = (y + z)/2", vz, frac(1, 2) * (y + z));
  expect_equal(rep, "eq/nu-bracket-1", "[nu_x, y] = nu_x", commutator(vx, y), vx);
  expect_equal(rep, "eq/nu-bracket-2", "[y, nu_z] = nu_z", commutator(y, vz), vz);
  expect_equal(rep, "eq/nu-bracket-3", "[nu_z, nu_x] = y/2", commutator(vz, vx),
               frac(1, 2) * y);
  expect_equal(rep, "eq/casimir-sym",
               "Lambda = -(x y + y z + z x + y x + z y + x z)/2", lam,
               frac(-1, 2) * (x * y + y * z + z * x + y * x + z * y + x * z));
  expect_equal(rep, "eq/casimir-nu-1", "Lambda = 4 nu_x nu_z + y(y + 1)", lam,
               Scalar(4) * (vx * vz) + y * y + y);
  expect_equal(rep, "eq/casimir-nu-2", "Lambda = 4 nu_z nu_x + y(y - 1)", lam,
               Scalar(4) * (vz * vx) + y * y - y);
  expect_zero(rep, "eq/casimir-central-e", "[Lambda, e] = 0", commutator(lam, e));
  expect_zero(rep, "eq/casimir-central-h", "[Lambda, h] = 0", commutator(lam, h));
  expect_zero(rep, "eq/casimir-central-f", "[Lambda, f] = 0", commutator(lam, f));
  return rep;
}

// ----------------------------------------------------------------------
// Faithfulness of the ordered basis: expansion of generator words hits the
// expected monomials, reversed words stay independent, the graded slices
// have the two documented bases, and the power identity links e^i f^i to a
// polynomial in Lambda and h.

VerificationReport suite_pbw(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.suite = "pbw-basis";

  const USl2Element unit = pbw(0, 0, 0);
  const USl2Element e = gen_e(), h = gen_h(), f = gen_f();

  bool forward_ok = true;
  std::string forward_witness;
  std::vector<USl2Element> reversed;
  for (std::int32_t i = 0; i <= 3; ++i)
    for (std::int32_t j = 0; j <= 3; ++j)
      for (std::int32_t k = 0; k <= 3; ++k) {
        USl2Element word = power(e, i, unit) * power(h, j, unit) * power(f, k, unit);
        if (word != pbw(i, j, k)) {
          forward_ok = false;
          if (forward_witness.empty())
            forward_witness = "exponents " + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k);
        }
        reversed.push_back(power(f, k, unit) * power(h, j, unit) * power(e, i, unit));
      }
  rep.check("basis/forward-words",
            "ordered generator words with exponents <= 3 expand to their monomials", forward_ok,
            forward_witness);
  std::size_t rk = rank_of(reversed);
  rep.check("basis/reversed-rank",
            "the 64 reversed words f^k h^j e^i with exponents <= 3 have full rank",
            rk == reversed.size(),
            rk == reversed.size() ? "" : "rank " + std::to_string(rk));

  for (std::int32_t i = 0; i <= 6; ++i) {
    auto [lhs, rhs] = ef_power_identity(i);
    expect_equal(rep, "basis/power-identity-" + std::to_string(i),
                 "e^i f^i equals the Casimir product for i = " + std::to_string(i), lhs, rhs);
  }

  // The two families of graded bases in degrees -2..2 with i, j <= 2.
  const USl2Element lam = casimir(), y = equitable_y(), vx = nu_x(), vz = nu_z();
  for (std::int32_t n = 0; n <= 2; ++n) {
    std::vector<USl2Element> fam_hf, fam_he, fam_yx, fam_yz;
    bool homo = true;
    for (std::int32_t i = 0; i <= 2; ++i)
      for (std::int32_t j = 0; j <= 2; ++j) {
        fam_hf.push_back(power(lam, i, unit) * power(h, j, unit) * power(f, n, unit));
        fam_he.push_back(power(lam, i, unit) * power(h, j, unit) * power(e, n, unit));
        fam_yx.push_back(power(lam, i, unit) * power(y, j, unit) * power(vx, n, unit));
        fam_yz.push_back(power(lam, i, unit) * power(y, j, unit) * power(vz, n, unit));
        homo = homo && is_homogeneous(fam_hf.back(), n) && is_homogeneous(fam_he.back(), -n) &&
               is_homogeneous(fam_yx.back(), n) && is_homogeneous(fam_yz.back(), -n);
      }
    const std::string sn = std::to_string(n);
    rep.check("basis/graded-homogeneous-" + sn,
              "the graded family members for |degree| = " + sn + " are homogeneous", homo);
    rep.check("basis/graded-rank-hf-" + sn,
              "Lambda^i h^j f^" + sn + " with i, j <= 2 are independent",
              rank_of(fam_hf) == fam_hf.size());
    rep.check("basis/graded-rank-he-" + sn,
              "Lambda^i h^j e^" + sn + " with i, j <= 2 are independent",
              rank_of(fam_he) == fam_he.size());
    rep.check("basis/graded-rank-ynux-" + sn,
              "Lambda^i y^j nu_x^" + sn + " with i, j <= 2 are independent",
              rank_of(fam_yx) == fam_yx.size());
    rep.check("basis/graded-rank-ynuz-" + sn,
              "Lambda^i y^j nu_z^" + sn + " with i, j <= 2 are independent",
              rank_of(fam_yz) == fam_yz.size());
  }

  // Independent straightening oracle on random generator words.
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> len(1, 6), letter(0, 2);
  bool words_ok = true;
  std::string word_witness;
  const std::size_t samples = 50;
  for (std::size_t s = 0; s < samples; ++s) {
    std::string word;
    USl2Element prod = unit;
    int L = len(rng);
    for (int p = 0; p < L; ++p) {
      switch (letter(rng)) {
        case 0: word += 'e'; prod = prod * e; break;
        case 1: word += 'h'; prod = prod * h; break;
        default: word += 'f'; prod = prod * f; break;
      }
    }
    if (prod != pbw_from_word(word)) {
      words_ok = false;
      if (word_witness.empty()) word_witness = "word " + word;
    }
  }
  rep.check("basis/word-oracle",
            "closed-form products match the pairwise straightening oracle on " +
                std::to_string(samples) + " random words",
            words_ok, word_witness);
  return rep;
}

// ----------------------------------------------------------------------
// Normal-form soundness, checked through the embedding and by reparsing.

VerificationReport suite_normal_form(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.suite = "normal-form-oracle";

  const RacahExpr A = RacahExpr::gen(RacahGen::A), B = RacahExpr::gen(RacahGen::B),
                  C = RacahExpr::gen(RacahGen::C), D = RacahExpr::gen(RacahGen::D);
  const RacahExpr twoD = Scalar(2) * D;
  expect_zero(rep, "nf/defining-ab", "normalize([A, B] - 2 D) = 0", normalize(comm(A, B) - twoD));
  expect_zero(rep, "nf/defining-bc", "normalize([B, C] - 2 D) = 0", normalize(comm(B, C) - twoD));
  expect_zero(rep, "nf/defining-ca", "normalize([C, A] - 2 D) = 0", normalize(comm(C, A) - twoD));
  expect_zero(rep, "nf/gamma-sum",
              "normalize(alpha + beta + gamma) = 0",
              normalize(RacahExpr::gen(RacahGen::Alpha) + RacahExpr::gen(RacahGen::Beta) +
                        RacahExpr::gen(RacahGen::Gamma)));
  for (RacahGen g : {RacahGen::OmegaA, RacahGen::OmegaB, RacahGen::OmegaC}) {
    expect_equal(rep, std::string("nf/casimir-poly-") + gen_name(g),
                 std::string("the defining polynomial of ") + gen_name(g) +
                     " normalizes to the generator",
                 normalize(casimir_element(g)), normalize(RacahExpr::gen(g)));
  }

  RandomExprOptions ro;
  ro.max_depth = opt.depth;
  auto exprs = random_racah_exprs(opt.count, opt.seed, ro);

  bool embed_ok = true, shape_ok = true, idem_ok = true;
  std::string embed_witness, shape_witness, idem_witness;
  std::vector<RacahNF> nfs;
  nfs.reserve(exprs.size());
  for (std::size_t s = 0; s < exprs.size(); ++s) {
    const RacahExpr& u = exprs[s];
    RacahNF nf = normalize(u);
    for (const auto& [m, cc] : nf.terms()) {
      if (m.d < 0 || m.d > 1 || m.a < 0 || m.b < 0 || m.omega < 0 || m.alpha < 0 ||
          m.delta < 0 || m.beta < 0) {
        shape_ok = false;
        if (shape_witness.empty()) shape_witness = "sample " + std::to_string(s);
      }
    }
    if (embed(nf) != embed(u)) {
      embed_ok = false;
      if (embed_witness.empty())
        embed_witness = "sample " + std::to_string(s) + ": " + clip(to_text(u));
    }
    if (normalize(to_expr(nf)) != nf) {
      idem_ok = false;
      if (idem_witness.empty())
        idem_witness = "sample " + std::to_string(s) + ": " + clip(to_text(u));
    }
    nfs.push_back(std::move(nf));
  }
  const std::string nstr = std::to_string(exprs.size());
  rep.check("nf/random-shape",
            "all normal forms of " + nstr + " random expressions have middle exponent 0 or 1",
            shape_ok, shape_witness);
  rep.check("nf/random-embedding",
            "embedding a normal form agrees with embedding its expression on " + nstr +
                " random samples",
            embed_ok, embed_witness);
  rep.check("nf/random-idempotent",
            "normalization is idempotent through reparsing on " + nstr + " random samples",
            idem_ok, idem_witness);

  bool mult_ok = true;
  std::string mult_witness;
  std::size_t pairs = std::min<std::size_t>(exprs.size() / 2, 100);
  for (std::size_t p = 0; p < pairs; ++p) {
    const RacahExpr& u = exprs[2 * p];
    const RacahExpr& v = exprs[2 * p + 1];
    if (normalize(u * v) != nfs[2 * p] * nfs[2 * p + 1]) {
      mult_ok = false;
      if (mult_witness.empty()) mult_witness = "pair " + std::to_string(p);
    }
  }
  rep.check("nf/random-product",
            "normalization is multiplicative on " + std::to_string(pairs) + " random pairs",
            mult_ok, mult_witness);
  return rep;
}

// ----------------------------------------------------------------------
// Centrality, both abstractly (via normalization) and for the images.

VerificationReport suite_centrality(const SuiteOptions&) {
  VerificationReport rep;
  rep.suite = "centrality";

  const RacahGen central[] = {RacahGen::Alpha,  RacahGen::Beta,   RacahGen::Gamma,
                              RacahGen::Delta,  RacahGen::OmegaA, RacahGen::OmegaB,
                              RacahGen::OmegaC};
  const RacahGen basic[] = {RacahGen::A, RacahGen::B, RacahGen::C, RacahGen::D};
  for (RacahGen g : central) {
    for (RacahGen X : basic) {
      const std::string tag = std::string(gen_name(g)) + "-" + gen_name(X);
      expect_zero(rep, "central/abstract-" + tag,
                  std::string("normalize([") + gen_name(g) + ", " + gen_name(X) + "]) = 0",
                  normalize(comm(RacahExpr::gen(g), RacahExpr::gen(X))));
      expect_zero(rep, "central/image-" + tag,
                  std::string("[image(") + gen_name(g) + "), image(" + gen_name(X) + ")] = 0",
                  commutator(gen_image(g), gen_image(X)));
    }
  }
  rep.check("central/negative-A", "A is not central", !is_central(RacahExpr::gen(RacahGen::A)));
  rep.check("central/negative-D", "D is not central", !is_central(RacahExpr::gen(RacahGen::D)));
  return rep;
}

// ----------------------------------------------------------------------
// Injectivity certificate wrapped as a report.

VerificationReport suite_injectivity(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.suite = "injectivity";
  InjectivityOptions io;
  io.caps = opt.caps;
  io.limit = opt.limit;
  try {
    InjectivityCertificate cert = injectivity_certificate(io);
    rep.check("inj/rank",
              "the images of the " + std::to_string(cert.dimension) +
                  " capped basis monomials are linearly independent",
              cert.injective, to_json(cert).dump());
  } catch (const std::exception& ex) {
    rep.check("inj/rank", "injectivity certificate computed", false, ex.what());
  }
  return rep;
}

// ----------------------------------------------------------------------
// Zero divisors: sampled nonzero elements have nonzero products.

VerificationReport suite_zero_divisors(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.suite = "zero-divisors";

  RandomExprOptions ro;
  ro.max_depth = 4;
  ro.max_power = 2;
  ro.degree_cap = 6;
  std::mt19937_64 rng(opt.seed);

  auto draw_nonzero = [&](RacahNF& nf) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      RacahExpr u = random_racah_expr(rng, ro);
      nf = normalize(u);
      if (!nf.is_zero()) return true;
    }
    return false;
  };

  bool product_ok = true, image_ok = true, drawn_ok = true;
  std::string witness;
  for (std::size_t p = 0; p < opt.count; ++p) {
    RacahNF u, v;
    if (!draw_nonzero(u) || !draw_nonzero(v)) {
      drawn_ok = false;
      break;
    }
    RacahNF prod = u * v;
    if (prod.is_zero()) {
      product_ok = false;
      if (witness.empty()) witness = "pair " + std::to_string(p);
    } else if (embed(prod).is_zero()) {
      image_ok = false;
      if (witness.empty()) witness = "pair " + std::to_string(p);
    }
  }
  const std::string nstr = std::to_string(opt.count);
  rep.check("zero/sampling", "nonzero factors were drawn for all " + nstr + " pairs", drawn_ok);
  rep.check("zero/product", "products of " + nstr + " nonzero sampled pairs are nonzero",
            product_ok, witness);
  rep.check("zero/image", "the embedded products are nonzero as well", image_ok, witness);
  return rep;
}

VerificationReport with_name(VerificationReport r, const std::string& name) {
  r.suite = name;
  return r;
}

}  // namespace

const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> reg = {
      {"equitable-commutators",
       "commutator identities among the equitable generators, w, the ladder pair and the Casimir",
       suite_equitable},
      {"pbw-basis",
       "faithfulness of the ordered basis, graded bases and the e^i f^i product identity",
       suite_pbw},
      {"structural-laws",
       "bracket, shift and commutation laws of the ladder and diagonal elements R, L, theta, "
       "vartheta",
       [](const SuiteOptions&) {
         return with_name(verify_structural_laws(), "structural-laws");
       }},
      {"embedding-hom",
       "the generator images satisfy the defining relations, with the full coefficient table",
       [](const SuiteOptions&) {
         return with_name(verify_homomorphism(), "embedding-hom");
       }},
      {"grading-tables",
       "homogeneous components of the images, their powers and mixed products",
       [](const SuiteOptions& o) {
         return with_name(verify_homogeneous_tables(o.grade_power, o.grade_triple),
                          "grading-tables");
       }},
      {"casimir-images",
       "closed forms of the three Casimir images and the intermediate component tables",
       [](const SuiteOptions&) {
         return with_name(verify_casimir_images(), "casimir-images");
       }},
      {"normal-form-oracle",
       "normal forms agree with the embedding, are idempotent and multiplicative on random input",
       suite_normal_form},
      {"centrality", "the central generators commute with A, B, C, D, abstractly and as images",
       suite_centrality},
      {"independence",
       "leading-monomial law of the quartic system and independence of the diagonal families",
       [](const SuiteOptions& o) {
         VerificationReport r;
         r.suite = "independence";
         r.merge(verify_leading_monomial_law(o.degree));
         r.merge(verify_theta_independence(o.degree));
         return r;
       }},
      {"injectivity", "exact-rank certificate for the images of capped basis monomials",
       suite_injectivity},
      {"rep-oracle",
       "evaluation in finite-dimensional irreducible representations at random rational points",
       [](const SuiteOptions& o) {
         return with_name(oracle_check_relations(o.dims, sample_points(o.points, o.seed)),
                          "rep-oracle");
       }},
      {"zero-divisors", "products of sampled nonzero elements are nonzero through the embedding",
       suite_zero_divisors},
  };
  return reg;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suite_registry()) names.push_back(s.name);
  return names;
}

bool has_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return true;
  return false;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& s : suite_registry())
    if (s.name == name) return s.run(opt);
  throw std::out_of_range("unknown suite: " + name);
}

std::vector<VerificationReport> run_all_suites(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& s : suite_registry()) out.push_back(s.run(opt));
  return out;
}

}  // namespace racah
