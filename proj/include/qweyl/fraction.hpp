#pragma once

#include <string>
#include <utility>

#include "qweyl/errors.hpp"

namespace qweyl {

// Customization point: shrink numerator and denominator without changing the
// value. The default does nothing.
template <class D>
struct FractionTraits {
  static void normalize(D&, D&) {}
};

// Element num/den of the fraction field of an integral domain D.
//
// Equality is decided by cross-multiplication, so it is exact whether or not
// FractionTraits<D> brings the pair into a canonical form.
template <class D>
class Fraction {
 public:
  Fraction() = default;
  explicit Fraction(D num) : num_(std::move(num)), den_(num_.one_like()) {}
  Fraction(D num, D den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("fraction with zero denominator");
    normalize();
  }

  const D& num() const { return num_; }
  const D& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  Fraction zero_like() const { return Fraction(num_.zero_like()); }
  Fraction one_like() const { return Fraction(num_.one_like()); }

  Fraction inverse() const {
    if (is_zero()) throw DomainError("inverse of zero fraction");
    return Fraction(den_, num_);
  }

  Fraction operator-() const {
    Fraction out = *this;
    out.num_ = -out.num_;
    return out;
  }

  Fraction& operator+=(const Fraction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      num_ = num_ + o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  Fraction& operator-=(const Fraction& o) { return *this += -o; }
  Fraction& operator*=(const Fraction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  Fraction& operator/=(const Fraction& o) { return *this *= o.inverse(); }

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = den_.one_like();
      return;
    }
    FractionTraits<D>::normalize(num_, den_);
  }

  D num_;
  D den_;
};

template <class D>
bool frac_equal(const Fraction<D>& a, const Fraction<D>& b) {
  return a == b;
}

}  // namespace qweyl
