#include "racah/rep.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "racah/embedding.hpp"

namespace racah {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const Scalar& v : data_)
    if (v != 0) return false;
  return true;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

RationalMatrix operator*(const Scalar& s, const RationalMatrix& a) {
  RationalMatrix out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.n_ == b.n_ && a.data_ == b.data_;
}

IrrepMatrices build_irrep(std::int32_t dim) {
  if (dim < 1 || dim > 512) throw std::domain_error("build_irrep: dimension must be 1..512");
  std::size_t d = std::size_t(dim);
  IrrepMatrices rep;
  rep.dim = dim;
  rep.e = RationalMatrix(d);
  rep.f = RationalMatrix(d);
  rep.h = RationalMatrix(d);
  for (std::size_t m = 0; m < d; ++m) {
    rep.h.at(m, m) = Scalar(dim - 1 - 2 * long(m));
    if (m + 1 < d) rep.f.at(m + 1, m) = Scalar(1);
    if (m > 0) rep.e.at(m - 1, m) = Scalar(long(m) * (dim - long(m)));
  }
  return rep;
}

std::vector<EvaluationPoint> sample_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-10, 10);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<EvaluationPoint> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back({frac(num(rng), den(rng)), frac(num(rng), den(rng)), frac(num(rng), den(rng))});
  return pts;
}

RationalMatrix evaluate(const TensorElement& u, const IrrepMatrices& rep,
                        const EvaluationPoint& pt) {
  const std::size_t d = std::size_t(rep.dim);
  // Powers of the three matrices are shared across terms.
  std::vector<RationalMatrix> epow{RationalMatrix::identity(d)};
  std::vector<RationalMatrix> hpow{RationalMatrix::identity(d)};
  std::vector<RationalMatrix> fpow{RationalMatrix::identity(d)};
  auto grow = [](std::vector<RationalMatrix>& pows, const RationalMatrix& base,
                 std::int32_t n) -> const RationalMatrix& {
    while (std::int32_t(pows.size()) <= n) pows.push_back(pows.back() * base);
    return pows[std::size_t(n)];
  };

  RationalMatrix out(d);
  for (const auto& [m, c] : u.terms()) {
    Scalar coeff = c * spow(pt.a, m.abc.a) * spow(pt.b, m.abc.b) * spow(pt.c, m.abc.c);
    if (coeff == 0) continue;
    RationalMatrix word = grow(epow, rep.e, m.pbw.e) * grow(hpow, rep.h, m.pbw.h) *
                          grow(fpow, rep.f, m.pbw.f);
    out = out + coeff * word;
  }
  return out;
}

VerificationReport oracle_check_relations(const std::vector<std::int32_t>& dims,
                                          const std::vector<EvaluationPoint>& pts) {
  VerificationReport r;
  r.suite = "rep-oracle";
  for (std::int32_t d : dims) {
    IrrepMatrices rep = build_irrep(d);
    const std::string sd = "rep/d" + std::to_string(d);
    auto comm_m = [](const RationalMatrix& u, const RationalMatrix& v) {
      return u * v - v * u;
    };
    r.check(sd + "/he", "h e - e h = 2 e", comm_m(rep.h, rep.e) == Scalar(2) * rep.e);
    r.check(sd + "/hf", "h f - f h = -2 f", comm_m(rep.h, rep.f) == Scalar(-2) * rep.f);
    r.check(sd + "/ef", "e f - f e = h", comm_m(rep.e, rep.f) == rep.h);

    RationalMatrix epow = RationalMatrix::identity(std::size_t(d));
    RationalMatrix fpow = epow;
    for (std::int32_t i = 0; i < d; ++i) {
      epow = epow * rep.e;
      fpow = fpow * rep.f;
    }
    r.check(sd + "/nilpotent", "raising and lowering matrices are nilpotent of order dim",
            epow.is_zero() && fpow.is_zero());

    EvaluationPoint origin{Scalar(0), Scalar(0), Scalar(0)};
    RationalMatrix casimir_scalar =
        frac(long(d) * long(d) - 1, 4) * RationalMatrix::identity(std::size_t(d));
    r.check(sd + "/casimir-scalar", "the Casimir acts by (dim^2 - 1)/4",
            evaluate(lift(casimir()), rep, origin) == casimir_scalar);

    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
      const EvaluationPoint& pt = pts[pi];
      const std::string sp = sd + "/pt" + std::to_string(pi);
      auto im = [&](RacahGen g) { return evaluate(gen_image(g), rep, pt); };
      RationalMatrix A = im(RacahGen::A), B = im(RacahGen::B), C = im(RacahGen::C),
                     D = im(RacahGen::D);
      RationalMatrix al = im(RacahGen::Alpha), be = im(RacahGen::Beta), ga = im(RacahGen::Gamma),
                     de = im(RacahGen::Delta);
      RationalMatrix OmA = im(RacahGen::OmegaA), OmB = im(RacahGen::OmegaB),
                     OmC = im(RacahGen::OmegaC);
      RationalMatrix twoD = Scalar(2) * D;
      r.check(sp + "/comm-AB", "[A, B] = 2 D", comm_m(A, B) == twoD);
      r.check(sp + "/comm-BC", "[B, C] = 2 D", comm_m(B, C) == twoD);
      r.check(sp + "/comm-CA", "[C, A] = 2 D", comm_m(C, A) == twoD);
      r.check(sp + "/alpha", "alpha = [A, D] + A C - B A",
              comm_m(A, D) + A * C - B * A == al);
      r.check(sp + "/beta", "beta = [B, D] + B A - C B", comm_m(B, D) + B * A - C * B == be);
      r.check(sp + "/gamma", "gamma = [C, D] + C B - A C",
              comm_m(C, D) + C * B - A * C == ga);
      r.check(sp + "/delta", "delta = A + B + C", A + B + C == de);
      Scalar half = frac(1, 2);
      r.check(sp + "/omegaA", "first Casimir matches its defining polynomial",
              D * D + half * (B * A * C + C * A * B) + A * A + B * ga - C * be - A * de == OmA);
      r.check(sp + "/omegaB", "second Casimir matches its defining polynomial",
              D * D + half * (C * B * A + A * B * C) + B * B + C * al - A * ga - B * de == OmB);
      r.check(sp + "/omegaC", "third Casimir matches its defining polynomial",
              D * D + half * (A * C * B + B * C * A) + C * C + A * be - B * al - C * de == OmC);
      r.check(sp + "/central", "the Casimir images commute with the generator images",
              comm_m(OmA, A).is_zero() && comm_m(OmA, B).is_zero() && comm_m(OmB, C).is_zero() &&
                  comm_m(OmC, D).is_zero());
    }
  }
  return r;
}

}  // namespace racah
