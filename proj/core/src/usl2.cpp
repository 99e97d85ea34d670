#include "racah/usl2.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace racah {

namespace {

constexpr std::int32_t kMaxExponent = 1 << 20;

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int64_t s = std::int64_t(a) + b;
  if (s < 0 || s > kMaxExponent) throw std::overflow_error("pbw exponent out of range");
  return std::int32_t(s);
}

// u * f
USl2Element append_f(const USl2Element& u) {
  USl2Element out;
  for (const auto& [m, c] : u.terms()) out.add({m.e, m.h, checked_add(m.f, 1)}, c);
  return out;
}

// u * (h + t)
USl2Element append_h_plus(const USl2Element& u, const Scalar& t) {
  USl2Element out;
  for (const auto& [m, c] : u.terms()) {
    // e^a h^b f^c * h = e^a h^{b+1} f^c + 2c e^a h^b f^c
    out.add({m.e, checked_add(m.h, 1), m.f}, c);
    Scalar low = Scalar(2 * long(m.f)) + t;
    out.add(m, c * low);
  }
  return out;
}

// f^k e^i in the ordered basis.  From f e^i = e^i f - i e^{i-1} (h + i - 1)
// one gets the recursion
//   fe(k, i) = fe(k-1, i) * f - i * fe(k-1, i-1) * (h + i - 1),
// filled bottom-up into a cache.  Map nodes are stable, so the returned
// reference stays valid while later calls insert more entries.
const USl2Element& fe_expansion(std::int32_t k, std::int32_t i) {
  static std::mutex mu;
  static std::map<std::pair<std::int32_t, std::int32_t>, USl2Element> cache;
  std::scoped_lock lock(mu);

  auto get = [&](std::int32_t kk, std::int32_t ii) -> const USl2Element* {
    auto it = cache.find({kk, ii});
    return it == cache.end() ? nullptr : &it->second;
  };
  if (const USl2Element* hit = get(k, i)) return *hit;

  for (std::int32_t kk = 0; kk <= k; ++kk) {
    for (std::int32_t ii = 0; ii <= i; ++ii) {
      if (get(kk, ii)) continue;
      USl2Element val;
      if (kk == 0) {
        val = pbw(ii, 0, 0);
      } else if (ii == 0) {
        val = pbw(0, 0, kk);
      } else {
        const USl2Element& a = *get(kk - 1, ii);
        const USl2Element& b = *get(kk - 1, ii - 1);
        val = append_f(a) - Scalar(ii) * append_h_plus(b, Scalar(ii - 1));
      }
      cache.emplace(std::pair{kk, ii}, std::move(val));
    }
  }
  return *get(k, i);
}

// e^{l.e} h^{l.h} f^{l.f} * e^{r.e} h^{r.h} f^{r.f}.  The middle block
// f^{l.f} e^{r.e} is straightened by fe_expansion; the flanking powers of h
// move across e and f by h^j e^a = e^a (h + 2a)^j and f^c h^j = (h + 2c)^j f^c.
USl2Element mono_product(const PBWMonomial& l, const PBWMonomial& r) {
  const USl2Element& mid = fe_expansion(l.f, r.e);
  USl2Element out;
  for (const auto& [m, c] : mid.terms()) {
    for (std::int32_t p = 0; p <= l.h; ++p) {
      Scalar cp = binomial(l.h, p) * Scalar(ipow(2 * long(m.e), l.h - p));
      if (cp == 0) continue;
      for (std::int32_t q = 0; q <= r.h; ++q) {
        Scalar cq = binomial(r.h, q) * Scalar(ipow(2 * long(m.f), r.h - q));
        if (cq == 0) continue;
        PBWMonomial key{checked_add(l.e, m.e), checked_add(p, checked_add(m.h, q)),
                        checked_add(m.f, r.f)};
        out.add(key, c * cp * cq);
      }
    }
  }
  return out;
}

}  // namespace

USl2Element pbw(std::int32_t i, std::int32_t j, std::int32_t k, const Scalar& c) {
  if (i < 0 || j < 0 || k < 0) throw std::domain_error("pbw: negative exponent");
  if (i > kMaxExponent || j > kMaxExponent || k > kMaxExponent)
    throw std::overflow_error("pbw exponent out of range");
  USl2Element u;
  u.add({i, j, k}, c);
  return u;
}

USl2Element gen_e() { return pbw(1, 0, 0); }
USl2Element gen_h() { return pbw(0, 1, 0); }
USl2Element gen_f() { return pbw(0, 0, 1); }

USl2Element pbw_product(const PBWMonomial& l, const PBWMonomial& r) { return mono_product(l, r); }

USl2Element operator*(const USl2Element& u, const USl2Element& v) {
  USl2Element out;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      USl2Element prod = mono_product(mu, mv);
      Scalar c = cu * cv;
      for (const auto& [m, pc] : prod.terms()) out.add(m, pc * c);
    }
  }
  return out;
}

USl2Element equitable_x() { return pbw(0, 0, 1, Scalar(-1)) + pbw(0, 1, 0, frac(-1, 2)); }
USl2Element equitable_y() { return pbw(0, 1, 0, frac(1, 2)); }
USl2Element equitable_z() { return pbw(1, 0, 0) + pbw(0, 1, 0, frac(-1, 2)); }
USl2Element nu_x() { return pbw(0, 0, 1, frac(1, 2)); }
USl2Element nu_z() { return pbw(1, 0, 0, frac(1, 2)); }

USl2Element casimir() {
  return pbw(1, 0, 1) + pbw(0, 2, 0, frac(1, 4)) + pbw(0, 1, 0, frac(-1, 2));
}

USl2Element w_element() {
  static const USl2Element w = [] {
    USl2Element z = equitable_z(), y = equitable_y(), x = equitable_x();
    return z * y * x + z * x;
  }();
  return w;
}

USl2Element grade_project(const USl2Element& u, std::int32_t n) {
  USl2Element out;
  for (const auto& [m, c] : u.terms())
    if (m.degree() == n) out.add(m, c);
  return out;
}

std::map<std::int32_t, USl2Element> grade_decompose(const USl2Element& u) {
  std::map<std::int32_t, USl2Element> parts;
  for (const auto& [m, c] : u.terms()) parts[m.degree()].add(m, c);
  return parts;
}

bool is_homogeneous(const USl2Element& u, std::int32_t n) {
  for (const auto& [m, c] : u.terms())
    if (m.degree() != n) return false;
  return true;
}

std::pair<std::int32_t, std::int32_t> degree_span(const USl2Element& u) {
  if (u.is_zero()) return {0, 0};
  std::int32_t lo = u.terms().begin()->first.degree();
  std::int32_t hi = lo;
  for (const auto& [m, c] : u.terms()) {
    lo = std::min(lo, m.degree());
    hi = std::max(hi, m.degree());
  }
  return {lo, hi};
}

std::pair<USl2Element, USl2Element> ef_power_identity(std::int32_t i) {
  if (i < 0) throw std::domain_error("ef_power_identity: negative power");
  USl2Element lhs = pbw(i, 0, 0) * pbw(0, 0, i);
  USl2Element rhs = pbw(0, 0, 0);
  USl2Element lam = casimir();
  for (std::int32_t j = 1; j <= i; ++j) {
    USl2Element a = gen_h() - pbw(0, 0, 0, Scalar(2 * j - 2));
    USl2Element b = gen_h() - pbw(0, 0, 0, Scalar(2 * j));
    rhs = rhs * (lam - frac(1, 4) * (a * b));
  }
  return {lhs, rhs};
}

USl2Element pbw_from_word(std::string_view word) {
  auto rank = [](char ch) -> int {
    switch (ch) {
      case 'e': return 0;
      case 'h': return 1;
      case 'f': return 2;
      default: throw std::domain_error("pbw_from_word: letters must be e, h or f");
    }
  };
  for (char ch : word) rank(ch);

  // Worklist of words with coefficients; straighten the leftmost inversion
  // of each word until every word is sorted as e...e h...h f...f.
  std::map<std::string, Scalar> pending{{std::string(word), Scalar(1)}};
  USl2Element out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    Scalar c = node.mapped();
    std::size_t pos = std::string::npos;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (rank(w[p]) > rank(w[p + 1])) {
        pos = p;
        break;
      }
    }
    if (pos == std::string::npos) {
      PBWMonomial m{};
      for (char ch : w) {
        if (ch == 'e') m.e = checked_add(m.e, 1);
        if (ch == 'h') m.h = checked_add(m.h, 1);
        if (ch == 'f') m.f = checked_add(m.f, 1);
      }
      out.add(m, c);
      continue;
    }
    auto push = [&](std::string nw, const Scalar& nc) {
      if (nc == 0) return;
      auto [it, fresh] = pending.try_emplace(std::move(nw), nc);
      if (!fresh) {
        it->second += nc;
        if (it->second == 0) pending.erase(it);
      }
    };
    std::string pre = w.substr(0, pos);
    std::string post = w.substr(pos + 2);
    char a = w[pos], b = w[pos + 1];
    if (a == 'h' && b == 'e') {
      // he = eh + 2e
      push(pre + "eh" + post, c);
      push(pre + "e" + post, Scalar(2) * c);
    } else if (a == 'f' && b == 'h') {
      // fh = hf + 2f
      push(pre + "hf" + post, c);
      push(pre + "f" + post, Scalar(2) * c);
    } else {
      // fe = ef - h
      push(pre + "ef" + post, c);
      push(pre + "h" + post, -c);
    }
  }
  return out;
}

}  // namespace racah
