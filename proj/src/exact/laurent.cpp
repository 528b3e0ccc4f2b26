#include "qweyl/laurent.hpp"

#include "qweyl/errors.hpp"

namespace qweyl {

LaurentPolynomial::LaurentPolynomial(Polynomial p, int shift) : body_(std::move(p)), shift_(shift) {
  normalize();
}

void LaurentPolynomial::normalize() {
  if (body_.is_zero()) {
    shift_ = 0;
    return;
  }
  const int v = body_.valuation();
  if (v > 0) {
    body_ = body_.shifted(-v);
    shift_ += v;
  }
}

LaurentPolynomial LaurentPolynomial::constant(const Scalar& c, std::string var) {
  return LaurentPolynomial(Polynomial::constant(c, std::move(var)));
}

LaurentPolynomial LaurentPolynomial::monomial(const Scalar& c, int exponent, std::string var) {
  return LaurentPolynomial(Polynomial::constant(c, std::move(var)), exponent);
}

LaurentPolynomial LaurentPolynomial::variable(Field f, std::string var) {
  return monomial(Scalar::one(f), 1, std::move(var));
}

int LaurentPolynomial::low_degree() const {
  if (is_zero()) throw DomainError("degree of the zero Laurent polynomial");
  return shift_;
}

int LaurentPolynomial::high_degree() const {
  if (is_zero()) throw DomainError("degree of the zero Laurent polynomial");
  return shift_ + *body_.degree();
}

Scalar LaurentPolynomial::coeff(int exponent) const { return body_.coeff(exponent - shift_); }

LaurentPolynomial LaurentPolynomial::inverse() const {
  if (!is_unit()) throw DomainError(to_string() + " is not a unit of the Laurent ring");
  return monomial(body_.leading().inverse(), -shift_, var());
}

LaurentPolynomial LaurentPolynomial::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPolynomial result = one_like(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

LaurentCanonical LaurentPolynomial::canonical() const {
  if (is_zero()) return {body_, std::nullopt};
  const Scalar c = body_.leading().inverse();
  return {body_ * c, monomial(c, -shift_, var())};
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  out.body_ = -out.body_;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) {
    body_ = body_ + o.body_.zero_like();  // merges field and indeterminate checks
    return *this;
  }
  if (is_zero()) {
    const Polynomial z = body_;
    *this = o;
    body_ = body_ + z;
    return *this;
  }
  const int low = std::min(shift_, o.shift_);
  body_ = body_.shifted(shift_ - low) + o.body_.shifted(o.shift_ - low);
  shift_ = low;
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  body_ = body_ * o.body_;
  shift_ += o.shift_;
  normalize();
  return *this;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.shift_ == b.shift_ && a.body_ == b.body_;
}

std::string LaurentPolynomial::to_string() const {
  if (shift_ >= 0) return body_.shifted(shift_).to_string();
  const std::string v = var().empty() ? std::string("t") : var();
  std::string den = v;
  if (shift_ < -1) den += "^" + std::to_string(-shift_);
  std::string num = body_.to_string();
  if (!body_.is_constant() || body_.coeff(0).is_negative()) num = "(" + num + ")";
  return num + "/" + den;
}

LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw DomainError("Laurent division by zero");
  return LaurentPolynomial(exact_div(a.body(), b.body()), a.shift() - b.shift());
}

bool unit_equivalent(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.canonical().poly == b.canonical().poly;
}

}  // namespace qweyl
