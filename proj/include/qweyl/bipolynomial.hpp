#pragma once

#include <map>
#include <string>
#include <utility>

#include "qweyl/fraction.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl {

// Sparse polynomial in the commuting indeterminates q and h over a Field.
// Terms are keyed by (deg_q, deg_h); zero coefficients are never stored.
class BiPolynomial {
 public:
  using Exponent = std::pair<int, int>;  // (deg_q, deg_h)

  BiPolynomial() = default;
  explicit BiPolynomial(Field f) : field_(f) {}

  static BiPolynomial constant(const Scalar& c);
  static BiPolynomial monomial(const Scalar& c, int deg_q, int deg_h);
  static BiPolynomial q(Field f) { return monomial(Scalar::one(f), 1, 0); }
  static BiPolynomial h(Field f) { return monomial(Scalar::one(f), 0, 1); }

  Field field() const { return field_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  Scalar coeff(int deg_q, int deg_h) const;

  int degree_q() const;  // -1 for zero
  int degree_h() const;  // -1 for zero
  int total_degree() const;  // -1 for zero

  BiPolynomial zero_like() const { return BiPolynomial(field_); }
  BiPolynomial one_like() const { return constant(Scalar::one(field_)); }

  BiPolynomial pow(unsigned e) const;

  // Largest monomial q^a h^b dividing every term; (0, 0) for zero.
  Exponent monomial_content() const;
  BiPolynomial divided_by_monomial(Exponent e) const;
  // gcd of the coefficients over Q (as a positive rational); leading
  // coefficient over a prime field.
  Scalar content() const;

  BiPolynomial operator-() const;
  BiPolynomial& operator+=(const BiPolynomial& o);
  BiPolynomial& operator-=(const BiPolynomial& o);
  BiPolynomial& operator*=(const Scalar& s);

  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
  friend BiPolynomial operator*(BiPolynomial a, const Scalar& s) { return a *= s; }
  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b);

  std::string to_string() const;

 private:
  void check_field(const BiPolynomial& o) const;

  Field field_;
  std::map<Exponent, Scalar> terms_;
};

// Bivariate fractions are not brought to lowest terms (no multivariate gcd).
// Normalization only strips common monomials and scalar content.
template <>
struct FractionTraits<BiPolynomial> {
  static void normalize(BiPolynomial& num, BiPolynomial& den);
};

// Element of Frac(K[q, h]).
using BiFraction = Fraction<BiPolynomial>;

}  // namespace qweyl
