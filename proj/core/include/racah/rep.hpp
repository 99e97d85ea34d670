#pragma once

#include <cstdint>
#include <vector>

#include "racah/report.hpp"
#include "racah/tensor.hpp"

namespace racah {

// Dense square matrix with rational entries, just big enough for checking
// the algebra on finite dimensional representations.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n, Scalar(0)) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_zero() const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Scalar& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

// Irreducible representation of dimension d: the diagonal element acts by
// d-1, d-3, ..., -(d-1), the lowering generator shifts the basis down with
// unit entries, and the raising generator shifts up with entries m(d-m).
struct IrrepMatrices {
  std::int32_t dim = 0;
  RationalMatrix e, f, h;
};

IrrepMatrices build_irrep(std::int32_t dim);

// Rational sample values for the three polynomial indeterminates.
struct EvaluationPoint {
  Scalar a, b, c;
};

std::vector<EvaluationPoint> sample_points(std::size_t count, std::uint64_t seed);

// Specializes the polynomial part at the point and the enveloping part in
// the representation.
RationalMatrix evaluate(const TensorElement& u, const IrrepMatrices& rep,
                        const EvaluationPoint& pt);

// Numeric oracle: the representation satisfies the enveloping relations,
// the Casimir acts by (d^2-1)/4, and the embedded generators satisfy every
// defining relation of the abstract algebra at each sample point.
VerificationReport oracle_check_relations(const std::vector<std::int32_t>& dims,
                                          const std::vector<EvaluationPoint>& pts);

}  // namespace racah
