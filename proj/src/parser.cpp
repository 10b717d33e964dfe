#include "freediv/parser.hpp"

#include <cctype>

namespace freediv {

namespace {

struct Token {
  enum Kind { number, ident, plus, minus, star, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::end, "", start};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
        ++j;
      tok_ = {Token::number, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_ = {Token::ident, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    ++i_;
    switch (c) {
      case '+': tok_ = {Token::plus, "+", start}; return;
      case '-': tok_ = {Token::minus, "-", start}; return;
      case '*': tok_ = {Token::star, "*", start}; return;
      case '^': tok_ = {Token::caret, "^", start}; return;
      case '(': tok_ = {Token::lparen, "(", start}; return;
      case ')': tok_ = {Token::rparen, ")", start}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start);
    }
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring)
      : lex_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (lex_.peek().kind != Token::end)
      throw ParseError("unexpected token '" + lex_.peek().text + "'",
                       lex_.peek().pos);
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    while (lex_.peek().kind == Token::plus ||
           lex_.peek().kind == Token::minus) {
      Token op = lex_.take();
      Polynomial rhs = term();
      acc = op.kind == Token::plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().kind == Token::star) {
      lex_.take();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (lex_.peek().kind == Token::minus) {
      lex_.take();
      return -factor();
    }
    if (lex_.peek().kind == Token::plus) {
      lex_.take();
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (lex_.peek().kind == Token::caret) {
      lex_.take();
      if (lex_.peek().kind != Token::number)
        throw ParseError("exponent must be a non-negative integer",
                         lex_.peek().pos);
      Token e = lex_.take();
      if (e.text.size() > 6) throw ParseError("exponent too large", e.pos);
      return base.pow(std::stoi(e.text));
    }
    return base;
  }

  Polynomial atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::number:
        return Polynomial::constant(ring_, Rational(Integer(t.text)));
      case Token::ident: {
        int i = ring_->index_of(t.text);
        if (i < 0)
          throw ParseError("unknown identifier '" + t.text + "'", t.pos);
        return Polynomial::variable(ring_, i);
      }
      case Token::lparen: {
        Polynomial inner = expr();
        if (lex_.peek().kind != Token::rparen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return inner;
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  Lexer lex_;
  RingPtr ring_;
};

}  // namespace

Polynomial parse_expression(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace freediv
