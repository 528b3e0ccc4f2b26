#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/scalar.hpp"

namespace qweyl {

// Dense univariate polynomial over a Field with a named indeterminate.
//
// Coefficients are stored low degree first and trimmed, so the leading
// coefficient is nonzero unless the polynomial is zero. The zero polynomial
// has no degree: degree() returns std::nullopt rather than a magic number.
//
// An empty indeterminate name marks a polynomial that is known to be
// constant-compatible; combining "x" with "" yields "x", combining "x" with
// "y" throws RingMismatch.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field f, std::string var = {});
  Polynomial(Field f, std::string var, std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c, std::string var = {});
  static Polynomial monomial(const Scalar& c, int degree, std::string var);
  static Polynomial variable(Field f, std::string var);

  Field field() const { return field_; }
  const std::string& var() const { return var_; }
  Polynomial with_var(std::string var) const;

  std::optional<int> degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  Scalar leading() const;
  // Lowest exponent carrying a nonzero coefficient; throws on zero.
  int valuation() const;

  Polynomial zero_like() const { return Polynomial(field_, var_); }
  Polynomial one_like() const { return constant(Scalar::one(field_), var_); }

  Polynomial monic() const;
  // Multiply by var^k for k >= 0; for k < 0 divide, requiring exactness.
  Polynomial shifted(int k) const;
  Polynomial derivative() const;
  Polynomial pow(unsigned e) const;
  Scalar evaluate(const Scalar& at) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  void trim();

  Field field_;
  std::string var_;
  std::vector<Scalar> c_;
};

// Euclidean division over the coefficient field: a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Quotient of a division known to be exact; throws DomainError otherwise.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

// Indeterminate shared by a and b, or RingMismatch.
std::string merge_var(const std::string& a, const std::string& b);

}  // namespace qweyl
