#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qweyl {

// Coefficient field: the prime field Z/p (p < 2^31) or the rationals (p == 0).
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  // Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

// An element of a Field. Prime-field values are kept in [0, p); rationals are
// kept in lowest terms with a positive denominator (mpq canonical form).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar zero_like() const { return zero(field_); }
  Scalar one_like() const { return one(field_); }

  // Residue for prime fields, undefined for rationals.
  std::uint32_t residue() const { return residue_; }
  // Rational value; for prime fields the residue as an integer.
  mpq_class rational() const;

  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Prime-field residues print in [0, p); rationals as "a" or "a/b".
  std::string to_string() const;
  // True when the printed form starts with '-'.
  bool is_negative() const;

 private:
  void check_same_field(const Scalar& o) const;
  // Rational payload; empty for prime fields and for the rational zero, so
  // that prime-field scalars never touch GMP.
  const mpq_class& rq() const;
  mpq_class& wq();

  Field field_;
  std::uint32_t residue_ = 0;
  std::optional<mpq_class> q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qweyl
