#include "matgerm/parser.hpp"

#include <cctype>

namespace matgerm {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& varnames)
      : text_(text), vars_(varnames) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    Polynomial p = term() * Rat(sign);
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      unsigned long e = uint_literal("exponent must be a non-negative integer literal");
      Polynomial p = Polynomial::constant(int(vars_.size()), 1);
      for (unsigned long i = 0; i < e; ++i) p = p * base;
      return p;
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    if (c == '-') fail("negative exponent or misplaced '-'");
    fail(std::string("unexpected character '") + c + "'");
  }

  unsigned long uint_literal(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(what);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial rational_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class num(std::string(text_.substr(start, pos_ - start)));
    mpz_class den(1);
    if (accept('/')) {
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected denominator digits after '/'");
      den = mpz_class(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) fail("zero denominator");
    }
    Rat c(num, den);
    c.canonicalize();
    return Polynomial::constant(int(vars_.size()), c);
  }

  Polynomial variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return Polynomial::variable(int(vars_.size()), int(i));
    pos_ = start;
    fail("unknown variable name '" + name + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& varnames) {
  return Parser(text, varnames).run();
}

}  // namespace matgerm
