#include "racah/racah_nf.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace racah {

namespace {

constexpr std::int32_t kMaxExponent = 1 << 20;

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int64_t s = std::int64_t(a) + b;
  if (s < 0 || s > kMaxExponent) throw std::overflow_error("racah exponent out of range");
  return std::int32_t(s);
}

// Exponents of the central generators Omega, alpha, delta, beta.
struct CentralPart {
  std::int32_t omega = 0;
  std::int32_t alpha = 0;
  std::int32_t delta = 0;
  std::int32_t beta = 0;

  friend auto operator<=>(const CentralPart&, const CentralPart&) = default;

  CentralPart operator+(const CentralPart& o) const {
    return {checked_add(omega, o.omega), checked_add(alpha, o.alpha),
            checked_add(delta, o.delta), checked_add(beta, o.beta)};
  }
};

// A word over the letters A, D, B times a central monomial.  This is the
// intermediate form between expression trees and the ordered basis.
struct RawKey {
  std::string word;
  CentralPart central;

  friend auto operator<=>(const RawKey&, const RawKey&) = default;
};

using RawSum = Linear<RawKey>;

RawSum raw_unit() { return RawSum(RawKey{}, Scalar(1)); }

RawSum raw_gen(char letter) { return RawSum(RawKey{std::string(1, letter), {}}, Scalar(1)); }

RawSum raw_central(CentralPart c) { return RawSum(RawKey{std::string(), c}, Scalar(1)); }

RawSum operator*(const RawSum& u, const RawSum& v) {
  RawSum out;
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      if (ku.word.size() + kv.word.size() > 4096)
        throw std::overflow_error("racah word too long");
      out.add({ku.word + kv.word, ku.central + kv.central}, cu * cv);
    }
  }
  return out;
}

// One reduction branch: replace the matched pair by `word`, multiply by
// `coeff` and by the central monomial `central`.
struct Branch {
  long coeff;
  const char* word;
  CentralPart central;
};

// Straightening rules toward the letter order A < D < B with at most one D.
// They rephrase the defining relations after eliminating C = delta - A - B
// and gamma = -alpha - beta:
//   B A = A B - 2 D
//   D A = A D + 2 D - A^2 - 2 A B - alpha + A delta
//   B D = D B + 2 D - B^2 - 2 A B + beta + B delta
//   D D = Omega + A^2 B + A B^2 + 2 A B - 2 A D - 2 D B - 2 D
//         - A B delta + D delta + B alpha - A beta + delta beta + alpha.
//
// Rewriting terminates: order words by (weight, D-count, inversions against
// A < D < B) compared lexicographically, with letter weights A = B = 2 and
// D = 3.  The first three rules keep the letter multiset (so weight and
// D-count are unchanged) and remove an adjacent inversion, or drop to a
// strictly lighter word; every branch of the last rule either loses weight
// or keeps weight 6 while shedding both D's.
const std::vector<Branch>& rule_for(char a, char b) {
  static const std::vector<Branch> ba = {{1, "AB", {}}, {-2, "D", {}}};
  static const std::vector<Branch> da = {{1, "AD", {}},          {2, "D", {}},
                                         {-1, "AA", {}},         {-2, "AB", {}},
                                         {-1, "", {0, 1, 0, 0}}, {1, "A", {0, 0, 1, 0}}};
  static const std::vector<Branch> bd = {{1, "DB", {}},         {2, "D", {}},
                                         {-1, "BB", {}},        {-2, "AB", {}},
                                         {1, "", {0, 0, 0, 1}}, {1, "B", {0, 0, 1, 0}}};
  static const std::vector<Branch> dd = {
      {1, "", {1, 0, 0, 0}},   {1, "AAB", {}},         {1, "ABB", {}},
      {2, "AB", {}},           {-2, "AD", {}},         {-2, "DB", {}},
      {-2, "D", {}},           {-1, "AB", {0, 0, 1, 0}}, {1, "D", {0, 0, 1, 0}},
      {1, "B", {0, 1, 0, 0}},  {-1, "A", {0, 0, 0, 1}},  {1, "", {0, 0, 1, 1}},
      {1, "", {0, 1, 0, 0}}};
  static const std::vector<Branch> none;
  if (a == 'B' && b == 'A') return ba;
  if (a == 'D' && b == 'A') return da;
  if (a == 'B' && b == 'D') return bd;
  if (a == 'D' && b == 'D') return dd;
  return none;
}

using WordNF = Linear<RacahMonomial>;

RacahMonomial shift_central(RacahMonomial m, const CentralPart& c) {
  m.omega = checked_add(m.omega, c.omega);
  m.alpha = checked_add(m.alpha, c.alpha);
  m.delta = checked_add(m.delta, c.delta);
  m.beta = checked_add(m.beta, c.beta);
  return m;
}

// Normal form of a bare word, memoized.  Words reached while normalizing
// share subproblems heavily, so the cache turns the rewrite tree into a DAG.
const WordNF& normalize_word(const std::string& w);

WordNF normalize_word_uncached(const std::string& w) {
  std::size_t pos = std::string::npos;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (!rule_for(w[p], w[p + 1]).empty()) {
      pos = p;
      break;
    }
  }
  if (pos == std::string::npos) {
    RacahMonomial m{};
    for (char ch : w) {
      if (ch == 'A') m.a = checked_add(m.a, 1);
      if (ch == 'D') m.d = checked_add(m.d, 1);
      if (ch == 'B') m.b = checked_add(m.b, 1);
    }
    return WordNF(m, Scalar(1));
  }
  const std::string pre = w.substr(0, pos);
  const std::string post = w.substr(pos + 2);
  WordNF out;
  for (const Branch& br : rule_for(w[pos], w[pos + 1])) {
    const WordNF& sub = normalize_word(pre + br.word + post);
    for (const auto& [m, c] : sub.terms())
      out.add(shift_central(m, br.central), Scalar(br.coeff) * c);
  }
  return out;
}

const WordNF& normalize_word(const std::string& w) {
  static std::mutex mu;
  static std::map<std::string, WordNF> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  WordNF val = normalize_word_uncached(w);
  std::scoped_lock lock(mu);
  return cache.emplace(w, std::move(val)).first->second;
}

RacahNF collapse(const RawSum& raw) {
  RacahNF out;
  for (const auto& [key, c] : raw.terms()) {
    const WordNF& nf = normalize_word(key.word);
    for (const auto& [m, mc] : nf.terms()) {
      RacahMonomial shifted = shift_central(m, key.central);
      out.add(shifted, c * mc);
    }
  }
  return out;
}

RawSum nf_to_raw(const RacahNF& u) {
  RawSum out;
  for (const auto& [m, c] : u.terms()) {
    RawKey key;
    key.word = std::string(std::size_t(m.a), 'A') + std::string(std::size_t(m.d), 'D') +
               std::string(std::size_t(m.b), 'B');
    key.central = {m.omega, m.alpha, m.delta, m.beta};
    out.add(key, c);
  }
  return out;
}

const RacahNF& omega_nf(RacahGen which);

RawSum lower(const RacahExpr::Node& n) {
  using Kind = RacahExpr::Kind;
  switch (n.kind) {
    case Kind::Gen:
      switch (n.gen) {
        case RacahGen::A: return raw_gen('A');
        case RacahGen::B: return raw_gen('B');
        case RacahGen::D: return raw_gen('D');
        case RacahGen::C: {
          RawSum s = raw_central({0, 0, 1, 0});
          s -= raw_gen('A');
          s -= raw_gen('B');
          return s;
        }
        case RacahGen::Alpha: return raw_central({0, 1, 0, 0});
        case RacahGen::Beta: return raw_central({0, 0, 0, 1});
        case RacahGen::Delta: return raw_central({0, 0, 1, 0});
        case RacahGen::Gamma: {
          RawSum s;
          s -= raw_central({0, 1, 0, 0});
          s -= raw_central({0, 0, 0, 1});
          return s;
        }
        case RacahGen::OmegaA: return raw_central({1, 0, 0, 0});
        case RacahGen::OmegaB:
        case RacahGen::OmegaC: return nf_to_raw(omega_nf(n.gen));
      }
      throw std::logic_error("lower: unknown generator");
    case Kind::Const: {
      RawSum s;
      s.add(RawKey{}, n.value);
      return s;
    }
    case Kind::Add: return lower(*n.lhs) + lower(*n.rhs);
    case Kind::Sub: return lower(*n.lhs) - lower(*n.rhs);
    case Kind::Scale: return n.value * lower(*n.lhs);
    case Kind::Mul: return lower(*n.lhs) * lower(*n.rhs);
    case Kind::Pow: return power(lower(*n.lhs), n.exponent, raw_unit());
    case Kind::Comm: {
      RawSum a = lower(*n.lhs), b = lower(*n.rhs);
      return a * b - b * a;
    }
    case Kind::AntiComm: {
      RawSum a = lower(*n.lhs), b = lower(*n.rhs);
      return a * b + b * a;
    }
  }
  throw std::logic_error("lower: unknown node kind");
}

// Normal forms of the second and third Casimir combinations, computed once
// from their defining polynomials.
const RacahNF& omega_nf(RacahGen which) {
  static const RacahNF nf_b = collapse(lower(casimir_element(RacahGen::OmegaB).node()));
  static const RacahNF nf_c = collapse(lower(casimir_element(RacahGen::OmegaC).node()));
  return which == RacahGen::OmegaB ? nf_b : nf_c;
}

}  // namespace

RacahNF normalize(const RacahExpr& e) { return collapse(lower(e.node())); }

RacahNF operator*(const RacahNF& u, const RacahNF& v) {
  return collapse(nf_to_raw(u) * nf_to_raw(v));
}

RacahExpr to_expr(const RacahNF& u) {
  RacahExpr sum = RacahExpr::constant(Scalar(0));
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    RacahExpr term = RacahExpr::constant(c);
    auto mul_pow = [&term](RacahGen g, std::int32_t n) {
      if (n == 0) return;
      RacahExpr p = (n == 1) ? RacahExpr::gen(g) : pow(RacahExpr::gen(g), n);
      term = term * p;
    };
    mul_pow(RacahGen::A, m.a);
    mul_pow(RacahGen::D, m.d);
    mul_pow(RacahGen::B, m.b);
    mul_pow(RacahGen::OmegaA, m.omega);
    mul_pow(RacahGen::Alpha, m.alpha);
    mul_pow(RacahGen::Delta, m.delta);
    mul_pow(RacahGen::Beta, m.beta);
    sum = first ? term : sum + term;
    first = false;
  }
  return sum;
}

Scalar bilinear_form(const RacahNF& u, const RacahMonomial& basis) {
  if (basis.d < 0 || basis.d > 1 || basis.a < 0 || basis.b < 0 || basis.omega < 0 ||
      basis.alpha < 0 || basis.delta < 0 || basis.beta < 0)
    throw std::domain_error("bilinear_form: tuple is not a basis monomial");
  return u.coeff(basis);
}

RacahExpr casimir_element(RacahGen which) {
  const RacahExpr A = RacahExpr::gen(RacahGen::A);
  const RacahExpr B = RacahExpr::gen(RacahGen::B);
  const RacahExpr C = RacahExpr::gen(RacahGen::C);
  const RacahExpr D = RacahExpr::gen(RacahGen::D);
  const RacahExpr al = RacahExpr::gen(RacahGen::Alpha);
  const RacahExpr be = RacahExpr::gen(RacahGen::Beta);
  const RacahExpr ga = RacahExpr::gen(RacahGen::Gamma);
  const RacahExpr de = RacahExpr::gen(RacahGen::Delta);
  const Scalar half = frac(1, 2);
  switch (which) {
    case RacahGen::OmegaA:
      return D * D + half * (B * A * C + C * A * B) + A * A + B * ga - C * be - A * de;
    case RacahGen::OmegaB:
      return D * D + half * (C * B * A + A * B * C) + B * B + C * al - A * ga - B * de;
    case RacahGen::OmegaC:
      return D * D + half * (A * C * B + B * C * A) + C * C + A * be - B * al - C * de;
    default:
      throw std::domain_error("casimir_element: expected OmegaA, OmegaB or OmegaC");
  }
}

VerificationReport check_centrality(const RacahExpr& u) {
  VerificationReport r;
  r.suite = "centrality";
  const RacahGen gens[] = {RacahGen::A, RacahGen::B, RacahGen::C, RacahGen::D};
  for (RacahGen g : gens) {
    RacahNF nf = normalize(comm(u, RacahExpr::gen(g)));
    r.check(std::string("central/bracket-") + gen_name(g),
            std::string("[candidate, ") + gen_name(g) + "] = 0", nf.is_zero(),
            nf.is_zero() ? "" : "bracket does not vanish");
  }
  return r;
}

bool is_central(const RacahExpr& u) { return check_centrality(u).all_passed(); }

}  // namespace racah
