#include "racah/embedding.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "racah/format.hpp"

namespace racah {

namespace {

TensorElement qa() { return t_a() * (t_a() + tensor_unit()); }
TensorElement qb() { return t_b() * (t_b() + tensor_unit()); }
TensorElement qc() { return t_c() * (t_c() + tensor_unit()); }

std::map<RacahGen, TensorElement> build_images() {
  const TensorElement one = tensor_unit();
  const TensorElement a = t_a(), b = t_b(), c = t_c();
  const TensorElement A2 = qa(), B2 = qb(), C2 = qc();
  const TensorElement lam = lift(casimir());
  const USl2Element x = equitable_x(), y = equitable_y(), z = equitable_z();

  std::map<RacahGen, TensorElement> t;
  t[RacahGen::A] =
      A2 + (b - c - a) * lift(x) + (a + b - c + one) * lift(y) - lift(x * y);
  t[RacahGen::B] =
      B2 + (c - a - b) * lift(y) + (b + c - a + one) * lift(z) - lift(y * z);
  t[RacahGen::C] =
      C2 + (a - b - c) * lift(z) + (c + a - b + one) * lift(x) - lift(z * x);
  t[RacahGen::D] = lift(w_element()) + (c + b * (c + a - b)) * lift(x) +
                   (a + c * (a + b - c)) * lift(y) + (b + a * (b + c - a)) * lift(z) +
                   (b - c) * lift(x * y) + (c - a) * lift(y * z) + (a - b) * lift(z * x);
  t[RacahGen::Alpha] = (lam - A2) * (B2 - C2);
  t[RacahGen::Beta] = (lam - B2) * (C2 - A2);
  t[RacahGen::Gamma] = (lam - C2) * (A2 - B2);
  t[RacahGen::Delta] = lam + A2 + B2 + C2;

  // The Casimir combinations are evaluated through the images above; their
  // defining polynomials only mention the eight generators already present.
  struct Eval {
    const std::map<RacahGen, TensorElement>& table;
    TensorElement run(const RacahExpr::Node& n) const {
      using Kind = RacahExpr::Kind;
      switch (n.kind) {
        case Kind::Gen: return table.at(n.gen);
        case Kind::Const: return n.value * tensor_unit();
        case Kind::Add: return run(*n.lhs) + run(*n.rhs);
        case Kind::Sub: return run(*n.lhs) - run(*n.rhs);
        case Kind::Scale: return n.value * run(*n.lhs);
        case Kind::Mul: return run(*n.lhs) * run(*n.rhs);
        case Kind::Pow: return power(run(*n.lhs), n.exponent, tensor_unit());
        case Kind::Comm: {
          TensorElement u = run(*n.lhs), v = run(*n.rhs);
          return u * v - v * u;
        }
        case Kind::AntiComm: {
          TensorElement u = run(*n.lhs), v = run(*n.rhs);
          return u * v + v * u;
        }
      }
      throw std::logic_error("embed: unknown node kind");
    }
  };
  Eval ev{t};
  t[RacahGen::OmegaA] = ev.run(casimir_element(RacahGen::OmegaA).node());
  t[RacahGen::OmegaB] = ev.run(casimir_element(RacahGen::OmegaB).node());
  t[RacahGen::OmegaC] = ev.run(casimir_element(RacahGen::OmegaC).node());
  return t;
}

}  // namespace

const std::map<RacahGen, TensorElement>& generator_images() {
  static const std::map<RacahGen, TensorElement> table = build_images();
  return table;
}

const TensorElement& gen_image(RacahGen g) { return generator_images().at(g); }

TensorElement embed(const RacahExpr& e) {
  using Kind = RacahExpr::Kind;
  const RacahExpr::Node& n = e.node();
  switch (n.kind) {
    case Kind::Gen: return gen_image(n.gen);
    case Kind::Const: return n.value * tensor_unit();
    case Kind::Add:
      return embed(RacahExpr::from_ptr(n.lhs)) + embed(RacahExpr::from_ptr(n.rhs));
    case Kind::Sub:
      return embed(RacahExpr::from_ptr(n.lhs)) - embed(RacahExpr::from_ptr(n.rhs));
    case Kind::Scale: return n.value * embed(RacahExpr::from_ptr(n.lhs));
    case Kind::Mul:
      return embed(RacahExpr::from_ptr(n.lhs)) * embed(RacahExpr::from_ptr(n.rhs));
    case Kind::Pow:
      return power(embed(RacahExpr::from_ptr(n.lhs)), n.exponent, tensor_unit());
    case Kind::Comm: {
      TensorElement u = embed(RacahExpr::from_ptr(n.lhs));
      TensorElement v = embed(RacahExpr::from_ptr(n.rhs));
      return u * v - v * u;
    }
    case Kind::AntiComm: {
      TensorElement u = embed(RacahExpr::from_ptr(n.lhs));
      TensorElement v = embed(RacahExpr::from_ptr(n.rhs));
      return u * v + v * u;
    }
  }
  throw std::logic_error("embed: unknown node kind");
}

const TensorElement& embed_basis(const RacahMonomial& m) {
  static std::mutex mu;
  static std::map<RacahMonomial, TensorElement> cache;
  std::scoped_lock lock(mu);

  // Peel one generator off the right end of the monomial so that images of
  // neighbouring tuples share their prefixes through the cache.
  struct Rec {
    std::map<RacahMonomial, TensorElement>& cache;
    const TensorElement& run(const RacahMonomial& m) {
      auto it = cache.find(m);
      if (it != cache.end()) return it->second;
      TensorElement val;
      RacahMonomial pred = m;
      RacahGen last{};
      bool unit = true;
      auto peel = [&](std::int32_t RacahMonomial::* field, RacahGen g) {
        if (unit && pred.*field > 0) {
          pred.*field -= 1;
          last = g;
          unit = false;
        }
      };
      // Reverse basis order, so the first hit is the rightmost factor.
      peel(&RacahMonomial::beta, RacahGen::Beta);
      peel(&RacahMonomial::delta, RacahGen::Delta);
      peel(&RacahMonomial::alpha, RacahGen::Alpha);
      peel(&RacahMonomial::omega, RacahGen::OmegaA);
      peel(&RacahMonomial::b, RacahGen::B);
      peel(&RacahMonomial::d, RacahGen::D);
      peel(&RacahMonomial::a, RacahGen::A);
      if (unit) {
        val = tensor_unit();
      } else {
        val = run(pred) * gen_image(last);
      }
      return cache.emplace(m, std::move(val)).first->second;
    }
  };
  Rec rec{cache};
  return rec.run(m);
}

TensorElement embed(const RacahNF& u) {
  TensorElement out;
  for (const auto& [m, c] : u.terms()) {
    const TensorElement& img = embed_basis(m);
    for (const auto& [t, tc] : img.terms()) out.add(t, tc * c);
  }
  return out;
}

VerificationReport verify_homomorphism() {
  VerificationReport r;
  r.suite = "embedding-hom";

  const TensorElement& An = gen_image(RacahGen::A);
  const TensorElement& Bn = gen_image(RacahGen::B);
  const TensorElement& Cn = gen_image(RacahGen::C);
  const TensorElement& Dn = gen_image(RacahGen::D);
  const TensorElement& al = gen_image(RacahGen::Alpha);
  const TensorElement& be = gen_image(RacahGen::Beta);
  const TensorElement& ga = gen_image(RacahGen::Gamma);
  const TensorElement& de = gen_image(RacahGen::Delta);
  const TensorElement twoD = Scalar(2) * Dn;

  expect_equal(r, "hom/comm-AB", "[image(A), image(B)] = 2 image(D)", commutator(An, Bn), twoD);
  expect_equal(r, "hom/comm-BC", "[image(B), image(C)] = 2 image(D)", commutator(Bn, Cn), twoD);
  expect_equal(r, "hom/comm-CA", "[image(C), image(A)] = 2 image(D)", commutator(Cn, An), twoD);

  expect_equal(r, "hom/alpha", "image(alpha) = [A,D] + AC - BA on images",
               commutator(An, Dn) + An * Cn - Bn * An, al);
  expect_equal(r, "hom/beta", "image(beta) = [B,D] + BA - CB on images",
               commutator(Bn, Dn) + Bn * An - Cn * Bn, be);
  expect_equal(r, "hom/gamma", "image(gamma) = [C,D] + CB - AC on images",
               commutator(Cn, Dn) + Cn * Bn - An * Cn, ga);
  expect_equal(r, "hom/delta", "image(delta) = A + B + C on images", An + Bn + Cn, de);
  expect_zero(r, "hom/alpha-beta-gamma", "images of alpha, beta, gamma sum to zero",
              al + be + ga);

  // Coefficient-by-coefficient comparison of [image(A), image(B)] with
  // 2 image(D): for every monomial in a, b, c the enveloping coefficient on
  // each side equals a stated bracket combination of equitable elements.
  const USl2Element x = equitable_x(), y = equitable_y(), z = equitable_z();
  const USl2Element xy = x * y, yz = y * z, zx = z * x;
  const Scalar two(2);
  struct Row {
    const char* name;
    AbcMonomial mono;
    USl2Element lhs;
    USl2Element rhs;
  };
  const std::vector<Row> rows = {
      {"a2", {2, 0, 0}, commutator(x, y) - commutator(y, z) - commutator(z, x),
       Scalar(-2) * z},
      {"b2", {0, 2, 0}, commutator(y, z) - commutator(z, x) - commutator(x, y),
       Scalar(-2) * x},
      {"c2", {0, 0, 2}, commutator(z, x) - commutator(x, y) - commutator(y, z),
       Scalar(-2) * y},
      {"ab", {1, 1, 0}, two * commutator(z, x), two * z + two * x},
      {"bc", {0, 1, 1}, two * commutator(x, y), two * x + two * y},
      {"ca", {1, 0, 1}, two * commutator(y, z), two * y + two * z},
      {"a", {1, 0, 0},
       commutator(x - y, yz) - commutator(y + z, xy) + commutator(z, x),
       two * zx - two * yz + two * y},
      {"b", {0, 1, 0},
       commutator(z - y, xy) - commutator(x + y, yz) - commutator(z, x) +
           two * commutator(y, z),
       two * xy - two * zx + two * z},
      {"c", {0, 0, 1},
       commutator(y + z, xy) + commutator(x + y, yz) + commutator(z, x),
       two * yz - two * xy + two * x},
      {"1", {0, 0, 0},
       commutator(y, z) - commutator(y, yz) + commutator(z, xy) + commutator(xy, yz),
       two * w_element()},
  };
  const TensorElement bracket = commutator(An, Bn);
  std::set<AbcMonomial> expected_support;
  for (const Row& row : rows) {
    expected_support.insert(row.mono);
    expect_equal(r, std::string("hom/coeff-") + row.name + "-bracket",
                 std::string("coefficient of ") + row.name + " in [image(A), image(B)]",
                 coeff_abc(bracket, row.mono), row.lhs);
    expect_equal(r, std::string("hom/coeff-") + row.name + "-D",
                 std::string("coefficient of ") + row.name + " in 2 image(D)",
                 coeff_abc(twoD, row.mono), row.rhs);
    expect_equal(r, std::string("hom/coeff-") + row.name + "-cross",
                 std::string("both stated coefficients at ") + row.name + " agree", row.lhs,
                 row.rhs);
  }
  r.check("hom/coeff-support", "no other monomials in a, b, c appear on either side",
          abc_support(bracket) == expected_support && abc_support(twoD) == expected_support);
  return r;
}

namespace {

// Checks that u equals the sum of its stated components and that each
// stated component matches; degrees outside the map must not occur.
void expect_components(VerificationReport& r, const std::string& id, const std::string& what,
                       const TensorElement& u,
                       const std::map<std::int32_t, TensorElement>& cells) {
  TensorElement sum;
  for (const auto& [n, cell] : cells) {
    expect_equal(r, id + "/deg" + std::to_string(n),
                 what + ": component of degree " + std::to_string(n),
                 grade_project_tensor(u, n), cell);
    sum += cell;
  }
  expect_equal(r, id + "/span", what + ": no components outside the table", u, sum);
}

}  // namespace

VerificationReport verify_homogeneous_tables(int max_power, int max_triple_total) {
  VerificationReport r;
  r.suite = "grading-tables";

  const TensorElement R = structural_R();
  const TensorElement L = structural_L();
  const TensorElement th = structural_theta();
  const TensorElement vt = structural_vartheta();
  const TensorElement one = tensor_unit();
  const TensorElement& An = gen_image(RacahGen::A);
  const TensorElement& Bn = gen_image(RacahGen::B);
  const TensorElement& Cn = gen_image(RacahGen::C);
  const TensorElement& Dn = gen_image(RacahGen::D);
  const TensorElement& de = gen_image(RacahGen::Delta);

  expect_components(r, "grading/A", "image(A)", An,
                    {{0, vt * (vt + one)}, {1, R}});
  expect_components(r, "grading/B", "image(B)", Bn,
                    {{-1, L}, {0, th * (th - one)}});
  expect_components(r, "grading/C", "image(C)", Cn,
                    {{-1, Scalar(-1) * L},
                     {0, de - vt * (vt + one) - th * (th - one)},
                     {1, Scalar(-1) * R}});
  expect_components(r, "grading/D", "image(D)", Dn,
                    {{-1, vt * L}, {0, frac(1, 2) * commutator(R, L)}, {1, th * R}});

  // Powers: the extreme graded components collapse to ladder words with
  // shifted diagonal factors, and nothing appears beyond the stated range.
  std::vector<TensorElement> Apow{one}, Bpow{one}, Cpow{one}, Dpow{one};
  std::vector<TensorElement> Rpow{one}, Lpow{one};
  int need = std::max(max_power, max_triple_total);
  for (int i = 1; i <= need; ++i) {
    Apow.push_back(Apow.back() * An);
    Bpow.push_back(Bpow.back() * Bn);
    Cpow.push_back(Cpow.back() * Cn);
    Dpow.push_back(Dpow.back() * Dn);
    Rpow.push_back(Rpow.back() * R);
    Lpow.push_back(Lpow.back() * L);
  }
  auto falling = [&](const TensorElement& base, int from, int count) {
    // product of (base - j) for j = from, from+1, ..., from+count-1
    TensorElement p = one;
    for (int j = 0; j < count; ++j) p = p * (base - Scalar(from + j) * one);
    return p;
  };

  for (int i = 1; i <= max_power; ++i) {
    const std::string si = std::to_string(i);
    {
      std::map<std::int32_t, TensorElement> cells;
      cells[0] = power(vt * (vt + one), i, one);
      cells[i] = Rpow[i];
      for (int n = 1; n < i; ++n) cells[n] = grade_project_tensor(Apow[i], n);
      expect_components(r, "grading/A-pow" + si, "image(A)^" + si, Apow[i], cells);
    }
    {
      std::map<std::int32_t, TensorElement> cells;
      cells[-i] = Lpow[i];
      cells[0] = power(th * (th - one), i, one);
      for (int n = -i + 1; n < 0; ++n) cells[n] = grade_project_tensor(Bpow[i], n);
      expect_components(r, "grading/B-pow" + si, "image(B)^" + si, Bpow[i], cells);
    }
    {
      std::map<std::int32_t, TensorElement> cells;
      cells[-i] = power(Scalar(-1) * L, i, one);
      cells[i] = power(Scalar(-1) * R, i, one);
      for (int n = -i + 1; n < i; ++n) cells[n] = grade_project_tensor(Cpow[i], n);
      expect_components(r, "grading/C-pow" + si, "image(C)^" + si, Cpow[i], cells);
    }
    {
      std::map<std::int32_t, TensorElement> cells;
      cells[-i] = falling(vt, 0, i) * Lpow[i];
      cells[i] = Rpow[i] * falling(th, 1, i);
      for (int n = -i + 1; n < i; ++n) cells[n] = grade_project_tensor(Dpow[i], n);
      expect_components(r, "grading/D-pow" + si, "image(D)^" + si, Dpow[i], cells);
    }
  }

  // Mixed products image(A)^i image(D)^j image(B)^k: top degree i+j, bottom
  // degree -(j+k), with closed-form extreme components.
  for (int i = 0; i <= max_triple_total; ++i) {
    for (int j = 0; i + j <= max_triple_total; ++j) {
      for (int k = 0; i + j + k <= max_triple_total; ++k) {
        if (i + j + k == 0) continue;
        TensorElement prod = Apow[i] * Dpow[j] * Bpow[k];
        std::string id = "grading/ADB-" + std::to_string(i) + std::to_string(j) +
                         std::to_string(k);
        std::string what = "image(A)^" + std::to_string(i) + " image(D)^" + std::to_string(j) +
                           " image(B)^" + std::to_string(k);
        int hi = i + j, lo = -(j + k);
        std::map<std::int32_t, TensorElement> cells;
        cells[hi] = Rpow[i + j] * power(th * (th - one), k, one) * falling(th, 1, j);
        TensorElement bottom =
            power(vt * (vt + one), i, one) * falling(vt, 0, j) * Lpow[j + k];
        cells[lo] = bottom;
        for (int n = lo + 1; n < hi; ++n) cells[n] = grade_project_tensor(prod, n);
        expect_components(r, id, what, prod, cells);
      }
    }
  }
  return r;
}

VerificationReport verify_casimir_images() {
  VerificationReport r;
  r.suite = "casimir-images";

  const TensorElement one = tensor_unit();
  const TensorElement A2 = qa(), B2 = qb(), C2 = qc();
  const TensorElement lam = lift(casimir());
  const TensorElement R = structural_R();
  const TensorElement L = structural_L();
  const TensorElement th = structural_theta();
  const TensorElement vt = structural_vartheta();
  const TensorElement& An = gen_image(RacahGen::A);
  const TensorElement& Bn = gen_image(RacahGen::B);
  const TensorElement& Cn = gen_image(RacahGen::C);
  const TensorElement& Dn = gen_image(RacahGen::D);
  const TensorElement& be = gen_image(RacahGen::Beta);
  const TensorElement& ga = gen_image(RacahGen::Gamma);
  const TensorElement& de = gen_image(RacahGen::Delta);
  const TensorElement& OmA = gen_image(RacahGen::OmegaA);
  const TensorElement& OmB = gen_image(RacahGen::OmegaB);
  const TensorElement& OmC = gen_image(RacahGen::OmegaC);

  const TensorElement closedA = (lam + A2 - B2 - C2) * (A2 * lam - B2 * C2) - (lam + A2) * (B2 + C2);
  const TensorElement closedB = (lam + B2 - C2 - A2) * (B2 * lam - C2 * A2) - (lam + B2) * (C2 + A2);
  const TensorElement closedC = (lam + C2 - A2 - B2) * (C2 * lam - A2 * B2) - (lam + C2) * (A2 + B2);
  expect_equal(r, "casimir/closed-A", "image of the first Casimir matches its closed form", OmA,
               closedA);
  expect_equal(r, "casimir/closed-B", "image of the second Casimir matches its closed form", OmB,
               closedB);
  expect_equal(r, "casimir/closed-C", "image of the third Casimir matches its closed form", OmC,
               closedC);

  // Graded tables for the products that assemble the first Casimir image.
  const TensorElement brk = commutator(R, L);
  const Scalar half = frac(1, 2);
  const TensorElement sq = de - vt * (vt + one) - th * (th - one);

  expect_components(
      r, "casimir/D2", "image(D)^2", Dn * Dn,
      {{2, th * (th + one) * R * R},
       {1, half * (th * R * brk) + half * (th * brk * R)},
       {0, frac(1, 4) * (brk * brk) + th * (vt + one) * (R * L) + vt * (th - one) * (L * R)},
       {-1, half * (vt * L * brk) + half * (vt * brk * L)},
       {-2, vt * (vt - one) * L * L}});

  const TensorElement two_vtp1_sq = Scalar(2) * ((vt + one) * (vt + one));
  expect_components(
      r, "casimir/BAC", "image(B) image(A) image(C)", Bn * An * Cn,
      {{2, Scalar(-1) * (th * (th - one)) * R * R},
       {1, th * (th - one) * (de - two_vtp1_sq - th * (th + one)) * R - L * R * R},
       {0, th * (th - one) * vt * (vt + one) * sq - th * (th - one) * (R * L) +
               (de - Scalar(2) * (vt * vt) - th * (th - one)) * (L * R)},
       {-1, (vt * (vt - one) * (de - vt * (vt - one) - (th - one) * (th - Scalar(2) * one)) -
             th * (th - one) * vt * (vt + one)) *
                    L -
                L * R * L},
       {-2, Scalar(-1) * (vt * (vt - one)) * L * L}});

  expect_components(
      r, "casimir/CAB", "image(C) image(A) image(B)", Cn * An * Bn,
      {{2, Scalar(-1) * ((th + one) * (th + Scalar(2) * one)) * R * R},
       {1, th * (th + one) * (de - two_vtp1_sq - th * (th - one)) * R - R * R * L},
       {0, th * (th - one) * vt * (vt + one) * sq +
               (de - two_vtp1_sq - th * (th - one)) * (R * L) - th * (th - one) * (L * R)},
       {-1, (vt * (vt + one) * sq - vt * (vt - one) * (th - one) * (th - Scalar(2) * one)) * L -
                L * R * L},
       {-2, Scalar(-1) * (vt * (vt - one)) * L * L}});

  expect_components(r, "casimir/A2", "image(A)^2", An * An,
                    {{2, R * R},
                     {1, Scalar(2) * ((vt + one) * (vt + one)) * R},
                     {0, (vt * vt) * ((vt + one) * (vt + one))}});

  const TensorElement gfac = (lam - C2) * (A2 - B2);
  expect_components(r, "casimir/Bgamma", "image(B) image(gamma)", Bn * ga,
                    {{0, th * (th - one) * gfac}, {-1, gfac * L}});

  const TensorElement bfac = (lam - B2) * (C2 - A2);
  expect_components(r, "casimir/Cbeta", "image(C) image(beta)", Cn * be,
                    {{1, Scalar(-1) * (bfac * R)}, {0, bfac * sq}, {-1, Scalar(-1) * (bfac * L)}});

  expect_components(r, "casimir/Adelta", "image(A) image(delta)", An * de,
                    {{1, de * R}, {0, vt * (vt + one) * de}});

  expect_equal(r, "casimir/assembled",
               "the Casimir image equals its defining combination of the seven products",
               Dn * Dn + half * (Bn * An * Cn + Cn * An * Bn) + An * An + Bn * ga - Cn * be -
                   An * de,
               OmA);

  const TensorElement* omegas[] = {&OmA, &OmB, &OmC};
  const char* omega_names[] = {"A", "B", "C"};
  const TensorElement* gens[] = {&An, &Bn, &Cn, &Dn};
  const char* gen_names[] = {"A", "B", "C", "D"};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      expect_zero(r,
                  std::string("casimir/central-") + omega_names[i] + "-" + gen_names[j],
                  std::string("Casimir image ") + omega_names[i] + " commutes with image(" +
                      gen_names[j] + ")",
                  commutator(*omegas[i], *gens[j]));
    }
  }
  return r;
}

}  // namespace racah
