#include "racah/parse.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "racah/usl2.hpp"

namespace racah {
namespace {

enum class Tok : unsigned char {
  Number,
  Ident,
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Scalar value;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string num = s.substr(start, i - start);
      std::string den = "1";
      if (i < n && s[i] == '/') {
        std::size_t j = i + 1;
        std::size_t dstart = j;
        while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == dstart) throw ParseError("expected digits after '/'", i + 1);
        den = s.substr(dstart, j - dstart);
        i = j;
      }
      if (Integer(den) == 0) throw ParseError("zero denominator", start);
      Scalar value{Integer(num), Integer(den)};
      value.canonicalize();
      out.push_back({Tok::Number, s.substr(start, i - start), value, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < n && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string name = s.substr(start, i - start);
      if (name == "ox")
        out.push_back({Tok::Star, name, Scalar(0), start});
      else
        out.push_back({Tok::Ident, name, Scalar(0), start});
      continue;
    }
    // UTF-8 tensor-product sign, treated as plain multiplication.
    if (ch == '\xE2' && s.compare(i, 3, "\xE2\x8A\x97") == 0) {
      out.push_back({Tok::Star, "ox", Scalar(0), start});
      i += 3;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case ',': k = Tok::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", start);
    }
    out.push_back({k, std::string(1, ch), Scalar(0), start});
    ++i;
  }
  out.push_back({Tok::End, "", Scalar(0), n});
  return out;
}

struct Ast {
  enum class K : unsigned char { Num, Ident, Add, Sub, Neg, Mul, Pow, Comm, AntiComm };
  K k;
  Scalar value;
  std::string name;
  std::size_t pos = 0;
  std::unique_ptr<Ast> lhs;
  std::unique_ptr<Ast> rhs;
  std::int64_t exponent = 0;
};

using AstPtr = std::unique_ptr<Ast>;

AstPtr make(Ast::K k, std::size_t pos) {
  auto p = std::make_unique<Ast>();
  p->k = k;
  p->pos = pos;
  return p;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  AstPtr run() {
    AstPtr e = expr();
    if (peek().kind != Tok::End) throw ParseError("trailing input", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  Token next() { return toks_[idx_++]; }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++idx_;
  }

  static bool starts_primary(Tok k) {
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen || k == Tok::LBracket ||
           k == Tok::LBrace;
  }

  AstPtr expr() {
    AstPtr lhs;
    if (peek().kind == Tok::Minus) {
      std::size_t pos = next().pos;
      AstPtr inner = term();
      lhs = make(Ast::K::Neg, pos);
      lhs->lhs = std::move(inner);
    } else {
      lhs = term();
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = next();
      AstPtr rhs = term();
      AstPtr node = make(op.kind == Tok::Plus ? Ast::K::Add : Ast::K::Sub, op.pos);
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  AstPtr term() {
    AstPtr lhs = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        std::size_t pos = next().pos;
        AstPtr rhs = factor();
        AstPtr node = make(Ast::K::Mul, pos);
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        lhs = std::move(node);
      } else if (starts_primary(peek().kind)) {
        std::size_t pos = peek().pos;
        AstPtr rhs = factor();
        AstPtr node = make(Ast::K::Mul, pos);
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  AstPtr factor() {
    AstPtr base = primary();
    if (peek().kind != Tok::Caret) return base;
    std::size_t pos = next().pos;
    if (peek().kind == Tok::Minus) throw ParseError("exponents must be non-negative", peek().pos);
    if (peek().kind != Tok::Number) throw ParseError("expected integer exponent", peek().pos);
    Token t = next();
    if (t.text.find('/') != std::string::npos)
      throw ParseError("expected integer exponent", t.pos);
    if (t.text.size() > 6) throw ParseError("exponent out of range", t.pos);
    AstPtr node = make(Ast::K::Pow, pos);
    node->lhs = std::move(base);
    node->exponent = std::stoll(t.text);
    return node;
  }

  AstPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        Token tok = next();
        AstPtr node = make(Ast::K::Num, tok.pos);
        node->value = tok.value;
        return node;
      }
      case Tok::Ident: {
        Token tok = next();
        AstPtr node = make(Ast::K::Ident, tok.pos);
        node->name = tok.text;
        return node;
      }
      case Tok::LParen: {
        next();
        AstPtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::LBracket: {
        std::size_t pos = next().pos;
        AstPtr a = expr();
        expect(Tok::Comma, "','");
        AstPtr b = expr();
        expect(Tok::RBracket, "']'");
        AstPtr node = make(Ast::K::Comm, pos);
        node->lhs = std::move(a);
        node->rhs = std::move(b);
        return node;
      }
      case Tok::LBrace: {
        std::size_t pos = next().pos;
        AstPtr a = expr();
        expect(Tok::Comma, "','");
        AstPtr b = expr();
        expect(Tok::RBrace, "'}'");
        AstPtr node = make(Ast::K::AntiComm, pos);
        node->lhs = std::move(a);
        node->rhs = std::move(b);
        return node;
      }
      default:
        throw ParseError("expected a value", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

const std::map<std::string, RacahGen>& racah_symbols() {
  static const std::map<std::string, RacahGen> table = {
      {"A", RacahGen::A},         {"B", RacahGen::B},
      {"C", RacahGen::C},         {"D", RacahGen::D},
      {"alpha", RacahGen::Alpha}, {"beta", RacahGen::Beta},
      {"gamma", RacahGen::Gamma}, {"delta", RacahGen::Delta},
      {"OmegaA", RacahGen::OmegaA}, {"OmegaB", RacahGen::OmegaB},
      {"OmegaC", RacahGen::OmegaC},
      // The ordered-basis Casimir prints as plain "Omega"; reparse it as the
      // A-flavored generator, which is the basis representative.
      {"Omega", RacahGen::OmegaA},
  };
  return table;
}

const std::map<std::string, TensorElement>& tensor_symbols() {
  static const std::map<std::string, TensorElement> table = [] {
    std::map<std::string, TensorElement> t;
    t["a"] = t_a();
    t["b"] = t_b();
    t["c"] = t_c();
    t["x"] = lift(equitable_x());
    t["y"] = lift(equitable_y());
    t["z"] = lift(equitable_z());
    t["e"] = lift(gen_e());
    t["h"] = lift(gen_h());
    t["f"] = lift(gen_f());
    t["nu_x"] = lift(nu_x());
    t["nu_z"] = lift(nu_z());
    t["Lambda"] = lift(casimir());
    t["w"] = lift(w_element());
    return t;
  }();
  return table;
}

enum class Language { Neutral, Racah, Tensor };

void classify(const Ast& node, int& racah_count, int& tensor_count) {
  if (node.k == Ast::K::Ident) {
    if (racah_symbols().count(node.name)) {
      ++racah_count;
    } else if (tensor_symbols().count(node.name)) {
      ++tensor_count;
    } else {
      throw ParseError("unknown identifier '" + node.name + "'", node.pos);
    }
  }
  if (node.lhs) classify(*node.lhs, racah_count, tensor_count);
  if (node.rhs) classify(*node.rhs, racah_count, tensor_count);
}

Language language_of(const Ast& root) {
  int racah_count = 0, tensor_count = 0;
  classify(root, racah_count, tensor_count);
  if (racah_count > 0 && tensor_count > 0)
    throw ParseError(
        "input mixes abstract generators (A, B, ...) with concrete tensor symbols (x, y, ...)",
        root.pos);
  if (racah_count > 0) return Language::Racah;
  if (tensor_count > 0) return Language::Tensor;
  return Language::Neutral;
}

RacahExpr eval_racah(const Ast& node) {
  switch (node.k) {
    case Ast::K::Num: return RacahExpr::constant(node.value);
    case Ast::K::Ident: return RacahExpr::gen(racah_symbols().at(node.name));
    case Ast::K::Add: return eval_racah(*node.lhs) + eval_racah(*node.rhs);
    case Ast::K::Sub: return eval_racah(*node.lhs) - eval_racah(*node.rhs);
    case Ast::K::Neg: return -eval_racah(*node.lhs);
    case Ast::K::Mul: return eval_racah(*node.lhs) * eval_racah(*node.rhs);
    case Ast::K::Pow: return pow(eval_racah(*node.lhs), node.exponent);
    case Ast::K::Comm: return comm(eval_racah(*node.lhs), eval_racah(*node.rhs));
    case Ast::K::AntiComm: return anticomm(eval_racah(*node.lhs), eval_racah(*node.rhs));
  }
  throw ParseError("malformed expression", node.pos);
}

TensorElement eval_tensor(const Ast& node) {
  switch (node.k) {
    case Ast::K::Num: return node.value * tensor_unit();
    case Ast::K::Ident: return tensor_symbols().at(node.name);
    case Ast::K::Add: return eval_tensor(*node.lhs) + eval_tensor(*node.rhs);
    case Ast::K::Sub: return eval_tensor(*node.lhs) - eval_tensor(*node.rhs);
    case Ast::K::Neg: return -eval_tensor(*node.lhs);
    case Ast::K::Mul: return eval_tensor(*node.lhs) * eval_tensor(*node.rhs);
    case Ast::K::Pow: return power(eval_tensor(*node.lhs), node.exponent, tensor_unit());
    case Ast::K::Comm: return commutator(eval_tensor(*node.lhs), eval_tensor(*node.rhs));
    case Ast::K::AntiComm:
      return anticommutator(eval_tensor(*node.lhs), eval_tensor(*node.rhs));
  }
  throw ParseError("malformed expression", node.pos);
}

std::pair<AstPtr, Language> parse_ast(const std::string& text) {
  Parser p(tokenize(text));
  AstPtr ast = p.run();
  Language lang = language_of(*ast);
  return {std::move(ast), lang};
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  auto [ast, lang] = parse_ast(text);
  if (lang == Language::Tensor) return eval_tensor(*ast);
  // Constant-only inputs default to the abstract language.
  return eval_racah(*ast);
}

RacahExpr parse_racah(const std::string& text) {
  auto [ast, lang] = parse_ast(text);
  if (lang == Language::Tensor)
    throw ParseError("expected an abstract expression, got tensor symbols", 0);
  return eval_racah(*ast);
}

TensorElement parse_tensor(const std::string& text) {
  auto [ast, lang] = parse_ast(text);
  if (lang == Language::Racah)
    throw ParseError("expected a tensor expression, got abstract generators", 0);
  return eval_tensor(*ast);
}

}  // namespace racah
