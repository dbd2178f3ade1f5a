// SPDX-License-Identifier: Apache-2.0
#include "layered/parser.hpp"

#include <optional>
#include <vector>

namespace layered {

namespace {

enum class Tok {
  LParen, RParen, LBrack, RBrack, Dot, Amp, Pipe, Tilde, Arrow,
  Eq, Neq, Lt, Le, Gt, Ge, Plus, Star, Caret, Slash, Minus, Comma,
  Ident, Nat, End
};

struct Token {
  Tok kind;
  std::string text; // Ident
  Int nat;          // Nat
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string &src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      Token t;
      t.line = line_;
      t.col = col_;
      if (i_ >= src_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = src_[i_];
      if (is_digit(c)) {
        std::string num;
        while (i_ < src_.size() && is_digit(src_[i_]))
          num += advance();
        t.kind = Tok::Nat;
        t.nat = int_from_digits(num);
        out.push_back(std::move(t));
        continue;
      }
      if (is_ident_start(c)) {
        std::string id;
        while (i_ < src_.size() && is_ident_char(src_[i_]))
          id += advance();
        t.kind = Tok::Ident;
        t.text = std::move(id);
        out.push_back(std::move(t));
        continue;
      }
      advance();
      switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '[': t.kind = Tok::LBrack; break;
      case ']': t.kind = Tok::RBrack; break;
      case '.': t.kind = Tok::Dot; break;
      case '&': t.kind = Tok::Amp; break;
      case '|': t.kind = Tok::Pipe; break;
      case '~': t.kind = Tok::Tilde; break;
      case '+': t.kind = Tok::Plus; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '/': t.kind = Tok::Slash; break;
      case ',': t.kind = Tok::Comma; break;
      case '-':
        if (i_ < src_.size() && src_[i_] == '>') {
          advance();
          t.kind = Tok::Arrow;
        } else {
          t.kind = Tok::Minus;
        }
        break;
      case '=':
        t.kind = Tok::Eq;
        break;
      case '!':
        if (i_ < src_.size() && src_[i_] == '=') {
          advance();
          t.kind = Tok::Neq;
        } else {
          throw parse_error(t.line, t.col, "'=' after '!'");
        }
        break;
      case '<':
        if (i_ < src_.size() && src_[i_] == '=') {
          advance();
          t.kind = Tok::Le;
        } else {
          t.kind = Tok::Lt;
        }
        break;
      case '>':
        if (i_ < src_.size() && src_[i_] == '=') {
          advance();
          t.kind = Tok::Ge;
        } else {
          t.kind = Tok::Gt;
        }
        break;
      default:
        throw parse_error(t.line, t.col, "a token (got unexpected byte)");
      }
      out.push_back(std::move(t));
    }
  }

private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

  void skip_ws() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  char advance() {
    char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  const std::string &src_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

bool is_reserved(const std::string &id) {
  return id == "A" || id == "E" || id == "PL" || id == "L" || id == "p1" ||
         id == "p2" || id == "true" || id == "false";
}

class Parser {
public:
  Parser(std::vector<Token> toks, const LayerSemiring &semiring)
      : toks_(std::move(toks)), sr_(semiring) {}

  Term term_all() {
    Term t = term();
    expect_end();
    return t;
  }

  Formula formula_all() {
    Formula f = formula();
    expect_end();
    return f;
  }

  LayeredElem element_all() {
    LayeredElem e = element();
    expect_end();
    return e;
  }

private:
  const Token &cur() const { return toks_[pos_]; }
  const Token &next() { return toks_[pos_++]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_ident(const char *s) const {
    return cur().kind == Tok::Ident && cur().text == s;
  }
  bool eat(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string &expected) const {
    throw parse_error(cur().line, cur().col, expected);
  }

  void expect(Tok k, const char *what) {
    if (!eat(k))
      fail(what);
  }

  void expect_end() {
    if (!at(Tok::End))
      fail("end of input");
  }

  // remembers the deepest failure so backtracking reports a useful position
  void note_failure(const parse_error &e) {
    if (!best_ || e.line > best_->line ||
        (e.line == best_->line && e.col > best_->col))
      best_ = e;
  }

  [[noreturn]] void refail(const std::string &expected) {
    parse_error here(cur().line, cur().col, expected);
    note_failure(here);
    throw *best_;
  }

  // ---- formulas ----

  Formula formula() {
    if (at_ident("A") || at_ident("E")) {
      bool universal = cur().text == "A";
      ++pos_;
      if (!at(Tok::Ident) || is_reserved(cur().text))
        fail("a variable name");
      std::string var = next().text;
      expect(Tok::Dot, "'.'");
      Formula body = formula();
      return universal ? f_forall(var, body) : f_exists(var, body);
    }
    return disj();
  }

  Formula disj() {
    Formula f = conj();
    while (eat(Tok::Pipe))
      f = f_or(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = lit();
    while (eat(Tok::Amp))
      f = f_and(f, lit());
    return f;
  }

  // negation binds tighter than implication
  Formula lit() {
    Formula f = neg();
    if (eat(Tok::Arrow))
      return f_implies(f, neg());
    return f;
  }

  Formula neg() {
    if (eat(Tok::Tilde))
      return f_not(neg());
    return primary();
  }

  // atom, or a parenthesized formula; both can begin with '(' so try the
  // atom reading first and backtrack
  Formula primary() {
    std::size_t save = pos_;
    try {
      return atom();
    } catch (const parse_error &e) {
      note_failure(e);
      pos_ = save;
    }
    if (eat(Tok::LParen)) {
      Formula f = formula();
      if (!eat(Tok::RParen))
        refail("')'");
      return f;
    }
    refail("an atomic formula");
  }

  Formula atom() {
    if (at_ident("true")) {
      ++pos_;
      return f_true();
    }
    if (at_ident("false")) {
      ++pos_;
      return f_false();
    }
    if (at_ident("PL")) {
      ++pos_;
      expect(Tok::LParen, "'('");
      Term t = term();
      expect(Tok::RParen, "')'");
      // PL(t) is definitionally t = p2(t)
      return f_eq(t, t_p2(t));
    }
    Term t1 = term();
    if (eat(Tok::Eq))
      return f_eq(t1, term());
    if (eat(Tok::Neq))
      return f_not(f_eq(t1, term()));
    if (eat(Tok::Lt))
      return f_lt(t1, term());
    if (eat(Tok::Gt))
      return f_lt(term(), t1);
    if (eat(Tok::Le)) {
      Term t2 = term();
      return f_or(f_lt(t1, t2), f_eq(t1, t2));
    }
    if (eat(Tok::Ge)) {
      Term t2 = term();
      return f_or(f_lt(t2, t1), f_eq(t1, t2));
    }
    fail("a relation symbol");
  }

  // ---- terms ----

  Term term() {
    Term t = factor();
    for (;;) {
      if (eat(Tok::Plus))
        t = t_add(t, factor());
      else if (eat(Tok::Star))
        t = t_mul(t, factor());
      else
        return t;
    }
  }

  Term factor() {
    Term b = base();
    if (eat(Tok::Caret)) {
      if (!at(Tok::Nat))
        fail("a natural exponent");
      if (cur().nat < 1 || cur().nat > 1000000)
        fail("an exponent between 1 and 1000000");
      Int n = next().nat;
      return t_pow(b, n);
    }
    return b;
  }

  Term base() {
    if (at(Tok::Nat)) {
      if (cur().nat == 0) {
        ++pos_;
        return t_zero();
      }
      if (cur().nat == 1) {
        ++pos_;
        return t_one();
      }
      fail("'0', '1', or a bracketed element literal");
    }
    if (at(Tok::LBrack))
      return t_lit(element());
    if (at_ident("L")) {
      ++pos_;
      expect(Tok::LParen, "'('");
      LayerElem l = layer_literal();
      expect(Tok::RParen, "')'");
      return t_layer_const(l);
    }
    if (at_ident("p1") || at_ident("p2")) {
      bool first = cur().text == "p1";
      ++pos_;
      expect(Tok::LParen, "'('");
      Term t = term();
      expect(Tok::RParen, "')'");
      return first ? t_p1(t) : t_p2(t);
    }
    if (at(Tok::Ident) && !is_reserved(cur().text))
      return t_var(next().text);
    if (eat(Tok::LParen)) {
      Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("a term");
  }

  LayerElem layer_literal() {
    if (!at(Tok::Nat))
      fail("a layer literal");
    int line = cur().line, col = cur().col;
    Int p = next().nat;
    Rat v(p);
    if (at(Tok::Slash)) {
      ++pos_;
      if (!at(Tok::Nat))
        fail("a denominator");
      Int q = next().nat;
      if (q == 0)
        throw parse_error(line, col, "a nonzero denominator");
      v = Rat(p, q);
    }
    try {
      return sr_.make(v);
    } catch (const std::domain_error &e) {
      throw parse_error(line, col, std::string("a valid layer for the '") +
                                       sr_.name() + "' semiring");
    }
  }

  Rat rational() {
    bool neg = eat(Tok::Minus);
    if (!at(Tok::Nat))
      fail("a rational number");
    int line = cur().line, col = cur().col;
    Int p = next().nat;
    Rat v(p);
    if (eat(Tok::Slash)) {
      if (!at(Tok::Nat))
        fail("a denominator");
      Int q = next().nat;
      if (q == 0)
        throw parse_error(line, col, "a nonzero denominator");
      v = Rat(p, q);
    }
    return neg ? -v : v;
  }

  LayeredElem element() {
    if (at(Tok::Nat)) {
      if (cur().nat == 0) {
        ++pos_;
        return zero_elem(sr_);
      }
      if (cur().nat == 1) {
        ++pos_;
        return one_elem(sr_);
      }
      fail("'0', '1', or '[layer]value'");
    }
    expect(Tok::LBrack, "'['");
    LayerElem l = layer_literal();
    expect(Tok::RBrack, "']'");
    Rat v = rational();
    return LayeredElem{l, Value::rat(v)};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const LayerSemiring &sr_;
  std::optional<parse_error> best_;
};

} // namespace

Term parse_term(const std::string &text, const LayerSemiring &semiring) {
  Parser p(Lexer(text).run(), semiring);
  return p.term_all();
}

Formula parse_formula(const std::string &text, const LayerSemiring &semiring) {
  Parser p(Lexer(text).run(), semiring);
  return rename_bound_apart(p.formula_all());
}

LayeredElem parse_element(const std::string &text,
                          const LayerSemiring &semiring) {
  Parser p(Lexer(text).run(), semiring);
  return p.element_all();
}

} // namespace layered
