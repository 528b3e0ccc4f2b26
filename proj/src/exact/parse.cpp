#include "qweyl/parse.hpp"

#include <cctype>
#include <climits>

#include "qweyl/errors.hpp"

namespace qweyl {
namespace {

class Parser {
 public:
  Parser(std::string_view text, Field f, std::string var) : s_(text), f_(f), var_(std::move(var)) {}

  RationalFunction run() {
    RationalFunction v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return with_var(v);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_atom(char c) const {
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  RationalFunction constant(long c) const { return rational_constant(Scalar(f_, c), var_); }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RationalFunction rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        RationalFunction rhs = unary();
        if (c == '/' && rhs.is_zero()) fail("division by zero");
        acc = c == '*' ? acc * rhs : acc / rhs;
      } else if (starts_atom(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
    const long e = integer();
    if (e > 4096) fail("exponent too large");
    if (negative && base.is_zero()) fail("negative power of zero");
    RationalFunction out = constant(1), b = negative ? base.inverse() : base;
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) out = out * b;
      if (k > 1) b = b * b;
    }
    return out;
  }

  long integer() {
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (LONG_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    return v;
  }

  RationalFunction atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long v = integer();
      return constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name(1, c);
      ++pos_;
      if (var_.empty()) {
        var_ = name;
      } else if (var_ != name) {
        fail("indeterminate '" + name + "' where '" + var_ + "' was expected");
      }
      return RationalFunction(Polynomial::variable(f_, var_));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // Constants parsed before the indeterminate was seen carry an empty name.
  RationalFunction with_var(const RationalFunction& v) const {
    if (var_.empty()) return v;
    return RationalFunction(v.num().with_var(var_), v.den().with_var(var_));
  }

  std::string_view s_;
  Field f_;
  std::string var_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational(std::string_view text, Field f, const std::string& var) {
  return Parser(text, f, var).run();
}

LaurentPolynomial parse_laurent(std::string_view text, Field f, const std::string& var) {
  const RationalFunction r = parse_rational(text, f, var);
  auto l = try_laurent(r);
  if (!l) throw ParseError("\"" + std::string(text) + "\" is not a Laurent polynomial");
  return *l;
}

Polynomial parse_polynomial(std::string_view text, Field f, const std::string& var) {
  const RationalFunction r = parse_rational(text, f, var);
  if (!r.den().is_constant()) throw ParseError("\"" + std::string(text) + "\" is not a polynomial");
  return r.num() * r.den().leading().inverse();
}

}  // namespace qweyl
