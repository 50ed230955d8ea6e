#include "polysmooth/parse.hpp"

#include <cctype>

#include "polysmooth/errors.hpp"

namespace polysmooth {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RatPoly run() {
    RatPoly value = expr();
    skip_ws();
    if (peek() == '/') {
      std::size_t at = pos_;
      ++pos_;
      skip_ws();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
        skip_ws();
      }
      if (!std::isdigit(peek())) throw SyntaxError("expected integer denominator", pos_);
      Int den = integer();
      if (den == 0) throw SyntaxError("division by zero", at);
      if (neg) den = -den;
      value = RatPoly(value.num(), value.den() * den);
    }
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("unexpected character", pos_);
    return value;
  }

 private:
  RatPoly expr() {
    RatPoly acc = term();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatPoly term() {
    RatPoly acc = unary();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '(' || std::isalpha(c) || std::isdigit(c)) {
        // juxtaposition: 2t, 3(t+1), (t+1)(t-1)
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  RatPoly unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatPoly power() {
    RatPoly base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    // right-associative; the exponent must evaluate to a nonnegative integer
    RatPoly e = (peek() == '-' || peek() == '+') ? unary() : power();
    if (e.degree() > 0) throw NonIntegerExponent(at);
    Rat v = e.coeff(0);
    if (v.get_den() != 1 || v < 0) throw NonIntegerExponent(at);
    if (!v.get_num().fits_ulong_p()) throw SyntaxError("exponent too large", at);
    unsigned long n = v.get_num().get_ui();
    RatPoly acc = RatPoly::constant(Rat(1));
    RatPoly sq = base;
    while (n > 0) {
      if (n & 1) acc = acc * sq;
      n >>= 1;
      if (n > 0) sq = sq * sq;
    }
    return acc;
  }

  RatPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      std::size_t at = pos_;
      ++pos_;
      RatPoly inner = expr();
      skip_ws();
      if (peek() != ')') throw SyntaxError("unbalanced parenthesis", at);
      ++pos_;
      return inner;
    }
    if (std::isdigit(c)) return RatPoly::constant(Rat(integer()));
    if (std::isalpha(c)) {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        name += s_[pos_++];
      if (var_.empty()) var_ = name;
      if (name != var_) throw SyntaxError("second variable '" + name + "'", at);
      return RatPoly::var();
    }
    if (c == '/') throw SyntaxError("division is only allowed at the top level", pos_);
    throw SyntaxError(pos_ == s_.size() ? "unexpected end of input" : "unexpected character",
                      pos_);
  }

  Int integer() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    return Int(digits);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::string var_;
};

}  // namespace

RatPoly parse_poly(const std::string& text) { return Parser(text).run(); }

std::string poly_variable(const std::string& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::string name;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i])))
        name += text[i++];
      return name;
    }
  }
  return "t";
}

}  // namespace polysmooth
