#include <cctype>
#include <string>

#include "radx/errors.hpp"
#include "radx/polynomial.hpp"

namespace radx {

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*
//                         term := factor ('*' factor)*
//                         factor := '-' factor | atom ('^' uint)?
//                         atom := uint ('/' uint)? | xK | '(' expr ')'
// Juxtaposition is deliberately not multiplication: "2x1" is an error.
class Parser {
 public:
  Parser(const std::string& text, int dimension) : text_(text), dim_(dimension) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& text_;
  int dim_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned long parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::stoul(text_.substr(start, pos_ - start));
  }

  mpz_class parse_bigint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += parse_term();
      } else if (c == '-') {
        ++pos_;
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * parse_factor();
      } else if (c == '/') {
        fail("'/' is only allowed inside a rational literal p/q");
      } else if (c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
        fail("expected an operator (juxtaposition is not multiplication)");
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_factor() {
    if (eat('-')) return -parse_factor();
    Polynomial base = parse_atom();
    if (eat('^')) {
      unsigned long e = parse_uint();
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a variable index after 'x'");
      unsigned long idx = parse_uint();
      if (idx < 1 || static_cast<int>(idx) > dim_)
        fail("variable index out of range for dimension " + std::to_string(dim_));
      return Polynomial::variable(dim_, static_cast<int>(idx));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = parse_bigint();
      if (eat('/')) {
        mpz_class den = parse_bigint();
        if (sgn(den) == 0) fail("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return Polynomial::constant(dim_, q);
      }
      return Polynomial::constant(dim_, Rational(num));
    }
    fail("expected a number, variable, or '('");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dimension) {
  if (dimension < 0) throw std::invalid_argument("negative dimension");
  return Parser(text, dimension).run();
}

}  // namespace radx
