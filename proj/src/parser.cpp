#include "quadent/parser.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <optional>
#include <vector>

namespace quadent {

namespace {

enum class Tok { Ident, Int, Sym, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) { return s == "fields" || s == "params" || s == "funcs"; }

class Parser {
 public:
  Parser(std::vector<Token> toks, const ParseOptions& opts) : toks_(std::move(toks)), opts_(opts) {}

  QuadSystemSpec run() {
    implicit_ = std::none_of(toks_.begin(), toks_.end(),
                             [](const Token& t) { return t.kind == Tok::Ident && is_keyword(t.text); });
    while (true) {
      skip_separators();
      if (peek().kind == Tok::End) break;
      if (peek().kind == Tok::Ident && is_keyword(peek().text)) {
        if (!spec_.equations.empty()) fail("declarations must precede equations", peek());
        declaration();
      } else {
        equation();
      }
    }
    if (spec_.equations.empty()) fail("no equations", peek());
    if (spec_.fields.empty()) fail("no fields", peek());
    if (opts_.require_square && spec_.equations.size() != spec_.fields.size()) {
      fail("system has " + std::to_string(spec_.equations.size()) + " equations for " +
               std::to_string(spec_.fields.size()) + " fields",
           toks_.back());
    }
    return std::move(spec_);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions opts_;
  bool implicit_ = false;
  QuadSystemSpec spec_;

  [[noreturn]] static void fail(const std::string& msg, const Token& t) { throw ParseError(msg, t.line, t.col); }

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_sym(const Token& t, const char* s) const { return t.kind == Tok::Sym && t.text == s; }
  bool accept(const char* s) {
    if (is_sym(peek(), s)) {
      next();
      return true;
    }
    return false;
  }
  void expect(const char* s) {
    if (!accept(s)) fail(std::string("expected '") + s + "'", peek());
  }
  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }
  void skip_separators() {
    while (peek().kind == Tok::Newline || is_sym(peek(), ";")) next();
  }

  bool declared(const std::string& name) const {
    auto in = [&](const auto& v) { return std::find(v.begin(), v.end(), name) != v.end(); };
    return in(spec_.fields) || in(spec_.params) ||
           std::any_of(spec_.funcs.begin(), spec_.funcs.end(), [&](const FuncDecl& f) { return f.name == name; });
  }

  char index_var() {
    const Token& t = next();
    if (t.kind != Tok::Ident || (t.text != "l" && t.text != "m")) fail("expected lattice index 'l' or 'm'", t);
    return t.text[0];
  }

  // Matches ^((-1)^l) or ^((-1)^m) if present.
  std::optional<Parity> parity_marker() {
    static const char* seq[] = {"^", "(", "(", "-", "1", ")", "^"};
    for (std::size_t k = 0; k < 7; ++k) {
      const Token& t = peek(k);
      if (t.text != seq[k]) return std::nullopt;
    }
    const Token& v = peek(7);
    if (v.kind != Tok::Ident || (v.text != "l" && v.text != "m") || !is_sym(peek(8), ")")) return std::nullopt;
    pos_ += 9;
    return v.text == "l" ? Parity::L : Parity::M;
  }

  void declaration() {
    const Token kw = next();
    bool any = false;
    while (peek().kind == Tok::Ident) {
      const Token& nt = next();
      if (is_keyword(nt.text) || nt.text == "l" || nt.text == "m") fail("reserved name '" + nt.text + "'", nt);
      if (declared(nt.text)) fail("duplicate declaration of '" + nt.text + "'", nt);
      any = true;
      if (kw.text == "fields") {
        spec_.fields.push_back(nt.text);
      } else if (kw.text == "params") {
        spec_.params.push_back(nt.text);
      } else {
        FuncDecl fd{nt.text};
        expect("(");
        fd.index_var = index_var();
        expect(")");
        if (auto p = parity_marker()) fd.parity = *p;
        spec_.funcs.push_back(fd);
      }
    }
    if (!any) fail("empty '" + kw.text + "' declaration", kw);
    if (peek().kind != Tok::Newline && peek().kind != Tok::End && !is_sym(peek(), ";")) {
      fail("unexpected token in declaration", peek());
    }
    if (spec_.fields.size() > 8) fail("at most 8 field components are supported", kw);
  }

  void equation() {
    const Token start = peek();
    ExprPtr e = expr();
    skip_newlines();
    if (accept("=")) {
      ExprPtr rhs = expr();
      bool zero = rhs->kind == NodeKind::Integer && rhs->value == 0;
      if (!zero) e = make_binary(NodeKind::Sub, e, rhs);
    }
    skip_newlines();
    if (!accept(";") && peek().kind != Tok::End) fail("expected ';' after equation", peek());
    if (opts_.require_two_vertices) {
      unsigned mask = referenced_corners(e);
      if (__builtin_popcount(mask) < 2) fail("equation references fewer than two quad vertices", start);
    }
    spec_.equations.push_back(e);
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      skip_newlines();
      if (accept("+")) e = make_binary(NodeKind::Add, e, term());
      else if (accept("-")) e = make_binary(NodeKind::Sub, e, term());
      else return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (true) {
      skip_newlines();
      if (accept("*")) e = make_binary(NodeKind::Mul, e, unary());
      else if (accept("/")) e = make_binary(NodeKind::Div, e, unary());
      else return e;
    }
  }

  ExprPtr unary() {
    skip_newlines();
    if (accept("-")) return make_neg(unary());
    if (accept("+")) return unary();
    return power();
  }

  int small_int() {
    bool neg = accept("-");
    const Token& t = next();
    if (t.kind != Tok::Int) fail("expected integer", t);
    if (t.text.size() > 6) fail("integer too large here", t);
    int v = std::stoi(t.text);
    return neg ? -v : v;
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!is_sym(peek(), "^")) return base;
    const Token caret = next();
    int e;
    if (accept("(")) {
      e = small_int();
      expect(")");
    } else {
      e = small_int();
    }
    if (e > 64 || e < -64) fail("exponent out of range", caret);
    return make_pow(base, e);
  }

  int field_index(const Token& t) {
    auto it = std::find(spec_.fields.begin(), spec_.fields.end(), t.text);
    if (it != spec_.fields.end()) return static_cast<int>(it - spec_.fields.begin());
    if (implicit_ && !declared(t.text)) {
      spec_.fields.push_back(t.text);
      return static_cast<int>(spec_.fields.size() - 1);
    }
    fail("undeclared field '" + t.text + "'", t);
  }

  ExprPtr primary() {
    skip_newlines();
    const Token& t = next();
    if (t.kind == Tok::Int) return make_integer(mpz_class(t.text));
    if (is_sym(t, "(")) {
      ExprPtr e = expr();
      skip_newlines();
      expect(")");
      return e;
    }
    if (t.kind != Tok::Ident) fail("expected expression", t);
    const Token id = t;
    if (is_sym(peek(), "[")) {
      int k = field_index(id);
      next();
      const Token st = peek();
      int i = small_int();
      expect(",");
      int j = small_int();
      expect("]");
      if (i < 0 || i > 1 || j < 0 || j > 1) fail("shift outside the unit quad", st);
      return make_field(k, i, j);
    }
    for (std::size_t f = 0; f < spec_.funcs.size(); ++f) {
      if (spec_.funcs[f].name != id.text) continue;
      Parity par = spec_.funcs[f].parity;
      if (accept("(")) {
        const Token iv = peek();
        if (index_var() != spec_.funcs[f].index_var) fail("function index differs from its declaration", iv);
        expect(")");
      }
      if (auto p = parity_marker()) par = *p;
      return make_func(static_cast<int>(f), par);
    }
    auto pit = std::find(spec_.params.begin(), spec_.params.end(), id.text);
    if (pit != spec_.params.end()) return make_param(static_cast<int>(pit - spec_.params.begin()));
    if (std::find(spec_.fields.begin(), spec_.fields.end(), id.text) != spec_.fields.end()) {
      fail("field '" + id.text + "' needs a shift [i,j]", id);
    }
    if (implicit_ && id.text != "l" && id.text != "m") {
      spec_.params.push_back(id.text);
      return make_param(static_cast<int>(spec_.params.size() - 1));
    }
    fail("undeclared identifier '" + id.text + "'", id);
  }
};

}  // namespace

QuadSystemSpec parse_system(std::string_view text, const ParseOptions& opts) {
  return Parser(tokenize(text), opts).run();
}

}  // namespace quadent
