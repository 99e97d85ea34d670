#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "racah/scalar.hpp"

namespace racah {

// Abstract generators of the Racah algebra: the three defining generators
// A, B, C, their bracket D, the central elements alpha, beta, gamma, delta,
// and the three Casimir combinations OmegaA, OmegaB, OmegaC.
enum class RacahGen : unsigned char {
  A,
  B,
  C,
  D,
  Alpha,
  Beta,
  Gamma,
  Delta,
  OmegaA,
  OmegaB,
  OmegaC,
};

const char* gen_name(RacahGen g);

// Immutable expression tree over the Racah generators.  Subtrees are shared
// through shared_ptr, so copies are cheap and expressions can be built with
// ordinary operator syntax.
class RacahExpr {
 public:
  enum class Kind : unsigned char { Gen, Const, Add, Sub, Mul, Pow, Comm, AntiComm, Scale };

  struct Node {
    Kind kind;
    RacahGen gen{};
    Scalar value;  // Const payload or Scale factor
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::int64_t exponent = 0;
  };

  // Default-constructed expression is the constant 0.
  RacahExpr();
  static RacahExpr gen(RacahGen g);
  static RacahExpr constant(const Scalar& c);

  const Node& node() const { return *p_; }
  std::shared_ptr<const Node> ptr() const { return p_; }
  static RacahExpr from_ptr(std::shared_ptr<const Node> p);

  friend RacahExpr operator+(const RacahExpr& a, const RacahExpr& b);
  friend RacahExpr operator-(const RacahExpr& a, const RacahExpr& b);
  friend RacahExpr operator*(const RacahExpr& a, const RacahExpr& b);
  friend RacahExpr operator*(const Scalar& s, const RacahExpr& a);
  friend RacahExpr operator-(const RacahExpr& a);

 private:
  explicit RacahExpr(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

RacahExpr pow(const RacahExpr& base, std::int64_t n);
RacahExpr comm(const RacahExpr& a, const RacahExpr& b);
RacahExpr anticomm(const RacahExpr& a, const RacahExpr& b);

// Renders the tree with the same grammar the parser accepts.
std::string to_text(const RacahExpr& e);

// Random expression trees for randomized cross-checks.  Generation is fully
// determined by the engine state; word growth is kept in check by bounding
// a weighted degree of every subtree (each generator weighted by the
// polynomial degree of its image in the tensor algebra), resampling when a
// product or power would exceed the bound.
struct RandomExprOptions {
  int max_depth = 6;
  int max_power = 3;
  int degree_cap = 9;
};

RacahExpr random_racah_expr(std::mt19937_64& rng, const RandomExprOptions& opt = {});
std::vector<RacahExpr> random_racah_exprs(std::size_t count, std::uint64_t seed,
                                          const RandomExprOptions& opt = {});

}  // namespace racah
