#include "cyclift/parse.hpp"

#include <cctype>
#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {
namespace {

struct Quotient {
  Polynomial num;
  Polynomial den;
};

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  Quotient parse_all() {
    Quotient q = expr();
    skip_space();
    if (pos_ < text_.size()) {
      throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    }
    return q;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial one() const { return Polynomial::constant(vars_, Rational(1)); }

  static Quotient add(const Quotient& a, const Quotient& b, bool subtract) {
    Polynomial rhs = subtract ? -b.num : b.num;
    if (a.den == b.den) return {a.num + rhs, a.den};
    return {a.num * b.den + rhs * a.den, a.den * b.den};
  }

  static Quotient simplify(Quotient q) {
    if (q.num.is_zero()) return {q.num, Polynomial::constant(q.den.vars(), Rational(1))};
    if (auto exact = divide_exact(q.num, q.den)) {
      return {*exact, Polynomial::constant(q.den.vars(), Rational(1))};
    }
    return q;
  }

  Quotient expr() {
    Quotient acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Quotient term() {
    Quotient acc = unary();
    for (;;) {
      if (accept('*')) {
        Quotient r = unary();
        acc = simplify({acc.num * r.num, acc.den * r.den});
      } else if (accept('/')) {
        std::size_t at = pos_;
        Quotient r = unary();
        if (r.num.is_zero()) throw ParseError(at, "division by zero");
        acc = simplify({acc.num * r.den, acc.den * r.num});
      } else {
        return acc;
      }
    }
  }

  Quotient unary() {
    if (accept('-')) {
      Quotient q = unary();
      return {-q.num, q.den};
    }
    if (accept('+')) return unary();
    return power();
  }

  Quotient power() {
    Quotient base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError(at, "expected non-negative integer exponent");
      }
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 1000) throw ParseError(at, "exponent too large");
        ++pos_;
      }
      return {base.num.pow(static_cast<unsigned>(e)), base.den.pow(static_cast<unsigned>(e))};
    }
    return base;
  }

  Quotient primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Quotient q = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return q;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return {Polynomial::constant(vars_, Rational(value)), one()};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = vars_.index_of(name);
      if (!idx) throw UnknownVariable(start, name);
      return {Polynomial::variable(vars_, *idx), one()};
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& vars) {
  Quotient q = Parser(text, vars).parse_all();
  if (auto exact = divide_exact(q.num, q.den)) return *exact;
  throw ParseError(0, "expression is not a polynomial (non-constant denominator)");
}

std::pair<Polynomial, Polynomial> parse_fraction(std::string_view text, const Variables& vars) {
  Quotient q = Parser(text, vars).parse_all();
  return {std::move(q.num), std::move(q.den)};
}

}  // namespace cyclift
