#include "racah/racah_expr.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace racah {

const char* gen_name(RacahGen g) {
  switch (g) {
    case RacahGen::A: return "A";
    case RacahGen::B: return "B";
    case RacahGen::C: return "C";
    case RacahGen::D: return "D";
    case RacahGen::Alpha: return "alpha";
    case RacahGen::Beta: return "beta";
    case RacahGen::Gamma: return "gamma";
    case RacahGen::Delta: return "delta";
    case RacahGen::OmegaA: return "OmegaA";
    case RacahGen::OmegaB: return "OmegaB";
    case RacahGen::OmegaC: return "OmegaC";
  }
  return "?";
}

namespace {

using NodePtr = std::shared_ptr<const RacahExpr::Node>;

NodePtr make_node(RacahExpr::Node n) { return std::make_shared<const RacahExpr::Node>(std::move(n)); }

NodePtr binary(RacahExpr::Kind k, NodePtr l, NodePtr r) {
  RacahExpr::Node n;
  n.kind = k;
  n.lhs = std::move(l);
  n.rhs = std::move(r);
  return make_node(std::move(n));
}

}  // namespace

RacahExpr::RacahExpr() : p_(nullptr) {
  Node n;
  n.kind = Kind::Const;
  n.value = Scalar(0);
  p_ = make_node(std::move(n));
}

RacahExpr RacahExpr::gen(RacahGen g) {
  Node n;
  n.kind = Kind::Gen;
  n.gen = g;
  return RacahExpr(make_node(std::move(n)));
}

RacahExpr RacahExpr::constant(const Scalar& c) {
  Node n;
  n.kind = Kind::Const;
  n.value = c;
  return RacahExpr(make_node(std::move(n)));
}

RacahExpr RacahExpr::from_ptr(std::shared_ptr<const Node> p) {
  if (!p) throw std::invalid_argument("RacahExpr: null node");
  return RacahExpr(std::move(p));
}

RacahExpr operator+(const RacahExpr& a, const RacahExpr& b) {
  return RacahExpr::from_ptr(binary(RacahExpr::Kind::Add, a.p_, b.p_));
}

RacahExpr operator-(const RacahExpr& a, const RacahExpr& b) {
  return RacahExpr::from_ptr(binary(RacahExpr::Kind::Sub, a.p_, b.p_));
}

RacahExpr operator*(const RacahExpr& a, const RacahExpr& b) {
  return RacahExpr::from_ptr(binary(RacahExpr::Kind::Mul, a.p_, b.p_));
}

RacahExpr operator*(const Scalar& s, const RacahExpr& a) {
  RacahExpr::Node n;
  n.kind = RacahExpr::Kind::Scale;
  n.value = s;
  n.lhs = a.p_;
  return RacahExpr::from_ptr(make_node(std::move(n)));
}

RacahExpr operator-(const RacahExpr& a) { return Scalar(-1) * a; }

RacahExpr pow(const RacahExpr& base, std::int64_t n) {
  if (n < 0) throw std::domain_error("pow: negative exponent");
  RacahExpr::Node node;
  node.kind = RacahExpr::Kind::Pow;
  node.lhs = base.ptr();
  node.exponent = n;
  return RacahExpr::from_ptr(make_node(std::move(node)));
}

RacahExpr comm(const RacahExpr& a, const RacahExpr& b) {
  return RacahExpr::from_ptr(binary(RacahExpr::Kind::Comm, a.ptr(), b.ptr()));
}

RacahExpr anticomm(const RacahExpr& a, const RacahExpr& b) {
  return RacahExpr::from_ptr(binary(RacahExpr::Kind::AntiComm, a.ptr(), b.ptr()));
}

namespace {

// Precedence levels: sums 1, products 2, powers 3, atoms 4.  Brackets make
// commutators self-delimiting atoms.
std::string render(const RacahExpr::Node& n, int parent) {
  using Kind = RacahExpr::Kind;
  std::string s;
  int prec = 4;
  switch (n.kind) {
    case Kind::Gen:
      s = gen_name(n.gen);
      break;
    case Kind::Const:
      s = to_string(n.value);
      if (n.value < 0) prec = 1;
      break;
    case Kind::Add:
      s = render(*n.lhs, 1) + " + " + render(*n.rhs, 1);
      prec = 1;
      break;
    case Kind::Sub:
      s = render(*n.lhs, 1) + " - " + render(*n.rhs, 2);
      prec = 1;
      break;
    case Kind::Mul:
      s = render(*n.lhs, 2) + " * " + render(*n.rhs, 2);
      prec = 2;
      break;
    case Kind::Scale:
      s = to_string(n.value) + " * " + render(*n.lhs, 2);
      prec = n.value < 0 ? 1 : 2;
      break;
    case Kind::Pow:
      s = render(*n.lhs, 4) + "^" + std::to_string(n.exponent);
      prec = 3;
      break;
    case Kind::Comm:
      s = "[" + render(*n.lhs, 1) + ", " + render(*n.rhs, 1) + "]";
      break;
    case Kind::AntiComm:
      s = "{" + render(*n.lhs, 1) + ", " + render(*n.rhs, 1) + "}";
      break;
  }
  if (prec < parent) s = "(" + s + ")";
  return s;
}

}  // namespace

std::string to_text(const RacahExpr& e) { return render(e.node(), 0); }

namespace {

// Letter-count bound of a subtree: A..D count 1, Casimir leaves count 2 (a
// degree-two word after elimination), central leaves and constants 0.
struct Sample {
  RacahExpr expr;
  int degree;
};

Sample random_node(std::mt19937_64& rng, int depth, const RandomExprOptions& opt) {
  // Leaf weights approximate the polynomial degree of the generator's image
  // in the tensor algebra, so that the cap keeps the cost of embedding a
  // random product bounded: A, B, C are quadratic, D cubic, the central
  // differences quartic, delta quadratic, and a Casimir generator sextic.
  auto leaf = [&]() -> Sample {
    std::uniform_int_distribution<int> pick(0, 12);
    switch (pick(rng)) {
      case 0: return {RacahExpr::gen(RacahGen::A), 2};
      case 1: return {RacahExpr::gen(RacahGen::B), 2};
      case 2: return {RacahExpr::gen(RacahGen::C), 2};
      case 3: return {RacahExpr::gen(RacahGen::D), 3};
      case 4: return {RacahExpr::gen(RacahGen::A), 2};
      case 5: return {RacahExpr::gen(RacahGen::B), 2};
      case 6: return {RacahExpr::gen(RacahGen::D), 3};
      case 7: return {RacahExpr::gen(RacahGen::Alpha), 4};
      case 8: return {RacahExpr::gen(RacahGen::Beta), 4};
      case 9: return {RacahExpr::gen(RacahGen::Gamma), 4};
      case 10: return {RacahExpr::gen(RacahGen::Delta), 2};
      case 11: return {RacahExpr::gen(RacahGen::OmegaB), 6};
      default: {
        std::uniform_int_distribution<long> num(-6, 6);
        std::uniform_int_distribution<long> den(1, 3);
        return {RacahExpr::constant(frac(num(rng), den(rng))), 0};
      }
    }
  };
  if (depth <= 0) return leaf();

  std::uniform_int_distribution<int> pick(0, 12);
  for (int attempt = 0; attempt < 8; ++attempt) {
    int k = pick(rng);
    if (k <= 2) return leaf();
    if (k <= 4) {
      Sample a = random_node(rng, depth - 1, opt);
      Sample b = random_node(rng, depth - 1, opt);
      return {a.expr + b.expr, std::max(a.degree, b.degree)};
    }
    if (k <= 6) {
      Sample a = random_node(rng, depth - 1, opt);
      Sample b = random_node(rng, depth - 1, opt);
      return {a.expr - b.expr, std::max(a.degree, b.degree)};
    }
    if (k <= 8) {
      Sample a = random_node(rng, depth - 1, opt);
      Sample b = random_node(rng, depth - 1, opt);
      if (a.degree + b.degree > opt.degree_cap) continue;
      return {a.expr * b.expr, a.degree + b.degree};
    }
    if (k == 9) {
      Sample a = random_node(rng, depth - 1, opt);
      std::uniform_int_distribution<int> ex(0, opt.max_power);
      int n = ex(rng);
      if (a.degree * n > opt.degree_cap) continue;
      return {pow(a.expr, n), a.degree * n};
    }
    if (k <= 11) {
      Sample a = random_node(rng, depth - 1, opt);
      Sample b = random_node(rng, depth - 1, opt);
      if (a.degree + b.degree > opt.degree_cap) continue;
      RacahExpr e = (k == 10) ? comm(a.expr, b.expr) : anticomm(a.expr, b.expr);
      return {e, a.degree + b.degree};
    }
    Sample a = random_node(rng, depth - 1, opt);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    return {frac(num(rng), den(rng)) * a.expr, a.degree};
  }
  return leaf();
}

}  // namespace

RacahExpr random_racah_expr(std::mt19937_64& rng, const RandomExprOptions& opt) {
  return random_node(rng, opt.max_depth, opt).expr;
}

std::vector<RacahExpr> random_racah_exprs(std::size_t count, std::uint64_t seed,
                                          const RandomExprOptions& opt) {
  std::mt19937_64 rng(seed);
  std::vector<RacahExpr> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_racah_expr(rng, opt));
  return out;
}

}  // namespace racah
