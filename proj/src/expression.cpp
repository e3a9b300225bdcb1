#include "fibercover/expression.hpp"

#include <cctype>

#include "fibercover/error.hpp"

namespace fibercover {

namespace {

constexpr long max_exponent = 256;

struct Fraction {
  Polynomial num;
  Polynomial den;

  static Fraction constant(GaussianRational c) {
    return {Polynomial::constant(std::move(c)), Polynomial::constant(1)};
  }

  Fraction reduced() const {
    Polynomial g = gcd(num, den);
    if (g.degree() < 1) return *this;
    return {divmod(num, g).first, divmod(den, g).first};
  }
};

Fraction operator+(const Fraction& a, const Fraction& b) {
  return Fraction{a.num * b.den + b.num * a.den, a.den * b.den}.reduced();
}
Fraction operator-(const Fraction& a) { return {-a.num, a.den}; }
Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction{a.num * b.num, a.den * b.den}.reduced();
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Fraction parse() {
    Fraction f = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::syntax, "column " + std::to_string(pos_ + 1) + ": " + message, pos_ + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '.';
  }

  Fraction expr() {
    Fraction acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Fraction rhs = term();
      acc = acc + (c == '+' ? rhs : -rhs);
    }
    return acc;
  }

  Fraction term() {
    Fraction acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        Fraction rhs = factor();
        if (rhs.num.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc * Fraction{rhs.den, rhs.num};
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Fraction factor() {
    char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      Fraction f = factor();
      return c == '-' ? -f : f;
    }
    return power();
  }

  Fraction power() {
    Fraction base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip();
    std::size_t start = pos_;
    long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > max_exponent) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer exponent");
    if (negative) {
      if (base.num.is_zero()) fail("zero to a negative power");
      base = {base.den, base.num};
    }
    Fraction out = Fraction::constant(1);
    for (long k = 0; k < e; ++k) out = out * base;
    return out;
  }

  Fraction primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Fraction inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word.size() != 1) {
        pos_ = start;
        fail("unknown name '" + std::string(word) + "'");
      }
      if (word == "i") return Fraction::constant(GaussianRational(0, 1));
      if (variable_ && *variable_ != word[0]) {
        pos_ = start;
        fail("second variable '" + std::string(word) + "'");
      }
      variable_ = word[0];
      return {Polynomial::variable(), Polynomial::constant(1)};
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Fraction number() {
    std::size_t start = pos_;
    mpz_class whole = 0, frac = 0, scale = 1;
    bool digits = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      whole = whole * 10 + (text_[pos_++] - '0');
      digits = true;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        frac = frac * 10 + (text_[pos_++] - '0');
        scale *= 10;
        digits = true;
      }
    }
    if (!digits) {
      pos_ = start;
      fail("malformed number");
    }
    mpq_class value(whole * scale + frac, scale);
    value.canonicalize();
    return Fraction::constant(GaussianRational(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<char> variable_;
};

}  // namespace

RationalMap parse_rational_map(std::string_view text) {
  Fraction f = Parser(text).parse();
  if (f.den.is_zero()) throw Error(ErrorKind::syntax, "division by zero");
  return RationalMap(f.num, f.den);
}

}  // namespace fibercover
