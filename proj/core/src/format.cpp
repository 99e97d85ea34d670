#include "racah/format.hpp"

#include <sstream>
#include <vector>

namespace racah {

namespace {

// Joins (monomial, coefficient) pairs already in print order.  Unit
// coefficients are suppressed, negative ones fold into the separator, and
// an empty monomial string stands for the unit basis element.
std::string join_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    Scalar mag = c < 0 ? Scalar(-c) : c;
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_string(mag) + " " + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

void append_power(std::string& s, const char* name, std::int32_t n, bool latex) {
  if (n == 0) return;
  if (!s.empty()) s += " ";
  s += name;
  if (n != 1) {
    s += latex ? "^{" + std::to_string(n) + "}" : "^" + std::to_string(n);
  }
}

std::string pbw_string(const PBWMonomial& m, bool latex) {
  std::string s;
  append_power(s, "e", m.e, latex);
  append_power(s, "h", m.h, latex);
  append_power(s, "f", m.f, latex);
  return s;
}

std::string abc_string(const AbcMonomial& m, bool latex) {
  std::string s;
  append_power(s, "a", m.a, latex);
  append_power(s, "b", m.b, latex);
  append_power(s, "c", m.c, latex);
  return s;
}

std::string tensor_string(const TensorMonomial& m, bool latex) {
  std::string abc = abc_string(m.abc, latex);
  std::string pbw = pbw_string(m.pbw, latex);
  if (abc.empty() && pbw.empty()) return "";
  if (abc.empty()) abc = "1";
  if (pbw.empty()) pbw = "1";
  return abc + (latex ? " \\otimes " : " ⊗ ") + pbw;
}

std::string racah_string(const RacahMonomial& m, bool latex) {
  std::string s;
  append_power(s, "A", m.a, latex);
  append_power(s, "D", m.d, latex);
  append_power(s, "B", m.b, latex);
  append_power(s, latex ? "\\Omega" : "Omega", m.omega, latex);
  append_power(s, latex ? "\\alpha" : "alpha", m.alpha, latex);
  append_power(s, latex ? "\\delta" : "delta", m.delta, latex);
  append_power(s, latex ? "\\beta" : "beta", m.beta, latex);
  return s;
}

std::string latex_coeff(const Scalar& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

template <class Key, class Fn>
std::string render_linear(const Linear<Key>& u, Fn mono_string) {
  std::vector<std::pair<std::string, Scalar>> terms;
  terms.reserve(u.term_count());
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it)
    terms.emplace_back(mono_string(it->first), it->second);
  return join_terms(terms);
}

template <class Key, class Fn>
std::string render_latex(const Linear<Key>& u, Fn mono_string) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const Scalar& c = it->second;
    Scalar mag = c < 0 ? Scalar(-c) : c;
    std::string mono = mono_string(it->first);
    std::string body;
    if (mono.empty()) {
      body = latex_coeff(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = latex_coeff(mag) + " " + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const USl2Element& u) {
  return render_linear(u, [](const PBWMonomial& m) { return pbw_string(m, false); });
}

std::string to_text(const TensorElement& u) {
  return render_linear(u, [](const TensorMonomial& m) { return tensor_string(m, false); });
}

std::string to_text(const RacahNF& u) {
  return render_linear(u, [](const RacahMonomial& m) { return racah_string(m, false); });
}

std::string to_latex(const USl2Element& u) {
  return render_latex(u, [](const PBWMonomial& m) { return pbw_string(m, true); });
}

std::string to_latex(const TensorElement& u) {
  return render_latex(u, [](const TensorMonomial& m) { return tensor_string(m, true); });
}

std::string to_latex(const RacahNF& u) {
  return render_latex(u, [](const RacahMonomial& m) { return racah_string(m, true); });
}

nlohmann::json to_json(const USl2Element& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : u.terms())
    terms.push_back({{"e", m.e}, {"h", m.h}, {"f", m.f}, {"coeff", to_string(c)}});
  return terms;
}

nlohmann::json to_json(const TensorElement& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : u.terms()) {
    terms.push_back({{"abc", {{"a", m.abc.a}, {"b", m.abc.b}, {"c", m.abc.c}}},
                     {"pbw", {{"e", m.pbw.e}, {"h", m.pbw.h}, {"f", m.pbw.f}}},
                     {"coeff", to_string(c)}});
  }
  return terms;
}

nlohmann::json to_json(const RacahNF& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : u.terms()) {
    terms.push_back({{"A", m.a},
                     {"D", m.d},
                     {"B", m.b},
                     {"Omega", m.omega},
                     {"alpha", m.alpha},
                     {"delta", m.delta},
                     {"beta", m.beta},
                     {"coeff", to_string(c)}});
  }
  return terms;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json entry = {{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return {{"suite", r.suite},
          {"passed", r.all_passed()},
          {"failed", r.failed_count()},
          {"checks", std::move(checks)}};
}

std::string report_to_text(const VerificationReport& r, bool verbose) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    if (!verbose && c.passed) continue;
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.statement;
    if (!c.passed && !c.witness.empty()) os << "\n       " << c.witness;
    os << "\n";
  }
  os << "suite " << r.suite << ": " << (r.checks.size() - r.failed_count()) << "/"
     << r.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace racah
