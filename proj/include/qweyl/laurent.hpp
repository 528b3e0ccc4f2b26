#pragma once

#include <optional>
#include <string>

#include "qweyl/polynomial.hpp"

namespace qweyl {

class LaurentPolynomial;

// Canonical representative of a Laurent polynomial under multiplication by
// units c*x^k: the monic polynomial with nonzero constant term. `unit` is the
// multiplier that produced it (poly == unit * original); absent for zero.
struct LaurentCanonical;

// Laurent polynomial over a Field: body * var^shift where the body is a
// Polynomial with nonzero constant term (or zero, in which case shift is 0).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Polynomial p, int shift = 0);

  static LaurentPolynomial constant(const Scalar& c, std::string var = {});
  static LaurentPolynomial monomial(const Scalar& c, int exponent, std::string var);
  static LaurentPolynomial variable(Field f, std::string var);

  Field field() const { return body_.field(); }
  const std::string& var() const { return body_.var(); }

  bool is_zero() const { return body_.is_zero(); }
  bool is_one() const { return shift_ == 0 && body_.is_one(); }
  // Units of K[x, 1/x] are the nonzero monomials.
  bool is_unit() const { return !is_zero() && body_.is_constant(); }
  bool is_constant() const { return is_zero() || (shift_ == 0 && body_.is_constant()); }

  const Polynomial& body() const { return body_; }
  int shift() const { return shift_; }
  int low_degree() const;
  int high_degree() const;
  Scalar coeff(int exponent) const;

  LaurentPolynomial zero_like() const { return LaurentPolynomial(body_.zero_like()); }
  LaurentPolynomial one_like() const { return LaurentPolynomial(body_.one_like()); }

  // Only defined for units; throws DomainError otherwise.
  LaurentPolynomial inverse() const;
  LaurentPolynomial pow(long e) const;

  LaurentCanonical canonical() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  // "x^2 + 1" for nonnegative shifts, "(x^10 + x^4 + x^2 + 1)/x^10" or
  // "1/x^2" otherwise.
  std::string to_string() const;

 private:
  void normalize();

  Polynomial body_;
  int shift_ = 0;
};

struct LaurentCanonical {
  Polynomial poly;
  std::optional<LaurentPolynomial> unit;
};

// a / b when b divides a in K[x, 1/x]; throws DomainError otherwise.
LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);

// True when a = unit * b for some unit of K[x, 1/x].
bool unit_equivalent(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace qweyl
