#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

// Polynomial in an auxiliary indeterminate (printed as λ) with coefficients in
// a commutative ring R, e.g. LaurentPolynomial. Only division by monic
// polynomials is offered, which is all that works over a general ring.
template <class R>
class PolyOver {
 public:
  PolyOver() = default;
  explicit PolyOver(R zero) : zero_(std::move(zero)) {}
  PolyOver(R zero, std::vector<R> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  static PolyOver constant(const R& c) { return PolyOver(c.zero_like(), {c}); }
  // λ - root
  static PolyOver linear(const R& root) { return PolyOver(root.zero_like(), {-root, root.one_like()}); }
  static PolyOver lambda(const R& zero) { return PolyOver(zero, {zero, zero.one_like()}); }

  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : zero_; }
  const R& zero() const { return zero_; }

  PolyOver zero_like() const { return PolyOver(zero_); }
  PolyOver one_like() const { return PolyOver(zero_, {zero_.one_like()}); }

  PolyOver operator-() const {
    PolyOver out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  PolyOver& operator+=(const PolyOver& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  PolyOver& operator-=(const PolyOver& o) { return *this += -o; }
  friend PolyOver operator+(PolyOver a, const PolyOver& b) { return a += b; }
  friend PolyOver operator-(PolyOver a, const PolyOver& b) { return a -= b; }
  friend PolyOver operator*(const PolyOver& a, const PolyOver& b) {
    if (a.is_zero() || b.is_zero()) return PolyOver(a.zero_);
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return PolyOver(a.zero_, std::move(out));
  }
  PolyOver& operator*=(const PolyOver& o) { return *this = *this * o; }
  friend bool operator==(const PolyOver& a, const PolyOver& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  // Multiply every coefficient by r.
  PolyOver scaled(const R& r) const {
    PolyOver out = *this;
    for (auto& c : out.c_) c = c * r;
    out.trim();
    return out;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
      const R& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      const std::string mono = i == 0 ? "" : i == 1 ? "λ" : "λ^" + std::to_string(i);
      if (mono.empty())
        out += c.to_string();
      else if (c.is_one())
        out += mono;
      else
        out += "(" + c.to_string() + ")" + mono;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  R zero_;
  std::vector<R> c_;
};

// Division by a monic divisor: a = q*d + r with deg r < deg d.
template <class R>
std::pair<PolyOver<R>, PolyOver<R>> divmod_monic(const PolyOver<R>& a, const PolyOver<R>& d) {
  if (d.is_zero() || !d.coeffs().back().is_one()) throw DomainError("divisor is not monic");
  const int dd = *d.degree();
  std::vector<R> rem = a.coeffs();
  if (static_cast<int>(rem.size()) <= dd) return {PolyOver<R>(a.zero()), a};
  std::vector<R> quot(rem.size() - static_cast<std::size_t>(dd), a.zero());
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const R f = rem[static_cast<std::size_t>(i)];
    if (f.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.coeff(j);
  }
  return {PolyOver<R>(a.zero(), std::move(quot)), PolyOver<R>(a.zero(), std::move(rem))};
}

}  // namespace qweyl
