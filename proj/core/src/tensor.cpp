#include "racah/tensor.hpp"

#include <stdexcept>

#include "racah/format.hpp"

namespace racah {

namespace {

constexpr std::int32_t kMaxExponent = 1 << 20;

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int64_t s = std::int64_t(a) + b;
  if (s < 0 || s > kMaxExponent) throw std::overflow_error("abc exponent out of range");
  return std::int32_t(s);
}

AbcMonomial abc_mul(const AbcMonomial& l, const AbcMonomial& r) {
  return {checked_add(l.a, r.a), checked_add(l.b, r.b), checked_add(l.c, r.c)};
}

}  // namespace

TensorElement tensor_unit() { return lift(pbw(0, 0, 0)); }

TensorElement t_a() {
  TensorElement u;
  u.add({{1, 0, 0}, {0, 0, 0}}, Scalar(1));
  return u;
}

TensorElement t_b() {
  TensorElement u;
  u.add({{0, 1, 0}, {0, 0, 0}}, Scalar(1));
  return u;
}

TensorElement t_c() {
  TensorElement u;
  u.add({{0, 0, 1}, {0, 0, 0}}, Scalar(1));
  return u;
}

TensorElement lift(const USl2Element& u) { return tensor_term({0, 0, 0}, u); }

TensorElement tensor_term(const AbcMonomial& abc, const USl2Element& u, const Scalar& c) {
  TensorElement out;
  for (const auto& [m, uc] : u.terms()) out.add({abc, m}, uc * c);
  return out;
}

TensorElement operator*(const TensorElement& u, const TensorElement& v) {
  TensorElement out;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      AbcMonomial abc = abc_mul(mu.abc, mv.abc);
      USl2Element prod = pbw_product(mu.pbw, mv.pbw);
      Scalar c = cu * cv;
      for (const auto& [m, pc] : prod.terms()) out.add({abc, m}, pc * c);
    }
  }
  return out;
}

USl2Element coeff_abc(const TensorElement& u, const AbcMonomial& m) {
  USl2Element out;
  for (const auto& [t, c] : u.terms())
    if (t.abc == m) out.add(t.pbw, c);
  return out;
}

std::set<AbcMonomial> abc_support(const TensorElement& u) {
  std::set<AbcMonomial> s;
  for (const auto& [t, c] : u.terms()) s.insert(t.abc);
  return s;
}

TensorElement grade_project_tensor(const TensorElement& u, std::int32_t n) {
  TensorElement out;
  for (const auto& [t, c] : u.terms())
    if (t.degree() == n) out.add(t, c);
  return out;
}

std::map<std::int32_t, TensorElement> grade_decompose_tensor(const TensorElement& u) {
  std::map<std::int32_t, TensorElement> parts;
  for (const auto& [t, c] : u.terms()) parts[t.degree()].add(t, c);
  return parts;
}

bool is_homogeneous_tensor(const TensorElement& u, std::int32_t n) {
  for (const auto& [t, c] : u.terms())
    if (t.degree() != n) return false;
  return true;
}

std::pair<std::int32_t, std::int32_t> degree_span_tensor(const TensorElement& u) {
  if (u.is_zero()) return {0, 0};
  std::int32_t lo = u.terms().begin()->first.degree();
  std::int32_t hi = lo;
  for (const auto& [t, c] : u.terms()) {
    lo = std::min(lo, t.degree());
    hi = std::max(hi, t.degree());
  }
  return {lo, hi};
}

TensorElement structural_R() {
  static const TensorElement R = [] {
    TensorElement shift = t_c() + t_a() - t_b() + tensor_unit();
    return Scalar(2) * lift(equitable_y() * nu_x()) + Scalar(2) * (shift * lift(nu_x()));
  }();
  return R;
}

TensorElement structural_L() {
  static const TensorElement L = [] {
    TensorElement shift = t_a() - t_b() - t_c() - tensor_unit();
    return Scalar(-2) * lift(equitable_y() * nu_z()) - Scalar(2) * (shift * lift(nu_z()));
  }();
  return L;
}

TensorElement structural_theta() { return lift(equitable_y()) - t_b(); }

TensorElement structural_vartheta() { return lift(equitable_y()) + t_a(); }

VerificationReport verify_structural_laws() {
  VerificationReport r;
  r.suite = "structural-laws";

  const TensorElement R = structural_R();
  const TensorElement L = structural_L();
  const TensorElement th = structural_theta();
  const TensorElement vt = structural_vartheta();
  const TensorElement one = tensor_unit();
  const TensorElement ybar = lift(equitable_y());

  r.check("structural/R-nonzero", "R is nonzero", !R.is_zero());
  r.check("structural/L-nonzero", "L is nonzero", !L.is_zero());
  r.check("structural/R-degree", "R is homogeneous of degree 1",
          is_homogeneous_tensor(R, 1) && !R.is_zero());
  r.check("structural/L-degree", "L is homogeneous of degree -1",
          is_homogeneous_tensor(L, -1) && !L.is_zero());
  r.check("structural/theta-degree", "theta is homogeneous of degree 0",
          is_homogeneous_tensor(th, 0));
  r.check("structural/vartheta-degree", "vartheta is homogeneous of degree 0",
          is_homogeneous_tensor(vt, 0));

  expect_equal(r, "structural/bracket-yR", "[R, 1(x)y] = R", commutator(R, ybar), R);
  expect_equal(r, "structural/bracket-yL", "[1(x)y, L] = L", commutator(ybar, L), L);
  expect_equal(r, "structural/bracket-Rtheta", "[R, theta] = R", commutator(R, th), R);
  expect_equal(r, "structural/bracket-Rvartheta", "[R, vartheta] = R", commutator(R, vt), R);
  expect_equal(r, "structural/bracket-thetaL", "[theta, L] = L", commutator(th, L), L);
  expect_equal(r, "structural/bracket-varthetaL", "[vartheta, L] = L", commutator(vt, L), L);

  expect_equal(r, "structural/shift-thetaR", "theta R = R (theta - 1)", th * R, R * (th - one));
  expect_equal(r, "structural/shift-varthetaR", "vartheta R = R (vartheta - 1)", vt * R,
               R * (vt - one));
  expect_equal(r, "structural/shift-thetaL", "theta L = L (theta + 1)", th * L, L * (th + one));
  expect_equal(r, "structural/shift-varthetaL", "vartheta L = L (vartheta + 1)", vt * L,
               L * (vt + one));

  const TensorElement RL = R * L;
  const TensorElement LR = L * R;
  const USl2Element y = equitable_y();
  const USl2Element uone = pbw(0, 0, 0);

  TensorElement rl_expected = (ybar + t_c() + t_a() - t_b() + one) *
                              (ybar + t_a() - t_b() - t_c()) *
                              (lift(y * (y + uone)) - lift(casimir()));
  TensorElement lr_expected = (ybar + t_c() + t_a() - t_b()) *
                              (ybar + t_a() - t_b() - t_c() - one) *
                              (lift(y * (y - uone)) - lift(casimir()));
  expect_equal(r, "structural/RL-product", "RL factors through the Casimir", RL, rl_expected);
  expect_equal(r, "structural/LR-product", "LR factors through the Casimir", LR, lr_expected);

  r.check("structural/RL-degree", "RL is homogeneous of degree 0", is_homogeneous_tensor(RL, 0));
  r.check("structural/LR-degree", "LR is homogeneous of degree 0", is_homogeneous_tensor(LR, 0));

  const TensorElement bracketRL = commutator(R, L);
  const TensorElement family[] = {th, vt, RL, LR, bracketRL};
  const char* names[] = {"theta", "vartheta", "RL", "LR", "[R,L]"};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      expect_zero(r, std::string("structural/commuting-") + names[i] + "-" + names[j],
                  std::string("[") + names[i] + ", " + names[j] + "] = 0",
                  commutator(family[i], family[j]));
    }
  }
  return r;
}

}  // namespace racah
