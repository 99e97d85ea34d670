#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "racah/scalar.hpp"

namespace racah {

// Sparse linear combination of basis keys with rational coefficients.
// Zero coefficients are never stored, so two equal elements always have
// identical term maps and operator== is exact.
template <class Key>
class Linear {
 public:
  using Terms = std::map<Key, Scalar>;

  Linear() = default;
  explicit Linear(const Key& k, const Scalar& c = Scalar(1)) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Linear& operator+=(const Linear& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Linear& operator-=(const Linear& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Linear& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Linear operator+(Linear a, const Linear& b) { return a += b; }
  friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
  friend Linear operator-(Linear a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend Linear operator*(const Scalar& s, Linear a) { return a *= s; }
  friend Linear operator*(Linear a, const Scalar& s) { return a *= s; }

  friend bool operator==(const Linear& a, const Linear& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Linear& a, const Linear& b) { return !(a == b); }

 private:
  Terms terms_;
};

// Binary exponentiation over any type with operator*; unit is the empty
// product.  Exponents are restricted to a sane range so runaway input is
// reported instead of exhausting memory.
template <class E>
E power(const E& base, std::int64_t n, const E& unit) {
  if (n < 0) throw std::domain_error("power: negative exponent");
  if (n > 4096) throw std::domain_error("power: exponent too large");
  E acc = unit;
  E sq = base;
  while (n > 0) {
    if (n & 1) acc = acc * sq;
    n >>= 1;
    if (n) sq = sq * sq;
  }
  return acc;
}

template <class E>
E commutator(const E& u, const E& v) {
  return u * v - v * u;
}

template <class E>
E anticommutator(const E& u, const E& v) {
  return u * v + v * u;
}

}  // namespace racah
