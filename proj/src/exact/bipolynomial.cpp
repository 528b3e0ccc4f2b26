#include "qweyl/bipolynomial.hpp"

#include <algorithm>
#include <climits>

#include "qweyl/errors.hpp"

namespace qweyl {

BiPolynomial BiPolynomial::constant(const Scalar& c) { return monomial(c, 0, 0); }

BiPolynomial BiPolynomial::monomial(const Scalar& c, int deg_q, int deg_h) {
  if (deg_q < 0 || deg_h < 0) throw InvalidArgument("negative exponent in BiPolynomial");
  BiPolynomial out(c.field());
  if (!c.is_zero()) out.terms_.emplace(Exponent{deg_q, deg_h}, c);
  return out;
}

void BiPolynomial::check_field(const BiPolynomial& o) const {
  if (!(field_ == o.field_))
    throw RingMismatch("BiPolynomial field mismatch: " + field_.name() + " vs " + o.field_.name());
}

bool BiPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0} && terms_.begin()->second.is_one();
}

bool BiPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Scalar BiPolynomial::coeff(int deg_q, int deg_h) const {
  auto it = terms_.find({deg_q, deg_h});
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

int BiPolynomial::degree_q() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPolynomial::degree_h() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BiPolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BiPolynomial BiPolynomial::pow(unsigned e) const {
  BiPolynomial result = one_like(), base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

BiPolynomial::Exponent BiPolynomial::monomial_content() const {
  if (terms_.empty()) return {0, 0};
  Exponent m{INT_MAX, INT_MAX};
  for (const auto& [e, c] : terms_) {
    m.first = std::min(m.first, e.first);
    m.second = std::min(m.second, e.second);
  }
  return m;
}

BiPolynomial BiPolynomial::divided_by_monomial(Exponent d) const {
  if (d == Exponent{0, 0}) return *this;
  BiPolynomial out(field_);
  for (const auto& [e, c] : terms_) {
    if (e.first < d.first || e.second < d.second) throw DomainError("inexact monomial division");
    out.terms_.emplace_hint(out.terms_.end(), Exponent{e.first - d.first, e.second - d.second}, c);
  }
  return out;
}

Scalar BiPolynomial::content() const {
  if (terms_.empty()) return Scalar::zero(field_);
  if (field_.is_prime_field()) return terms_.rbegin()->second;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    const mpq_class v = c.rational();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  return Scalar(field_, mpq_class(num_gcd, den_lcm));
}

BiPolynomial BiPolynomial::operator-() const {
  BiPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
  check_field(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) { return *this += -o; }

BiPolynomial& BiPolynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
  a.check_field(b);
  BiPolynomial out(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const BiPolynomial::Exponent e{ea.first + eb.first, ea.second + eb.second};
      Scalar prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool operator==(const BiPolynomial& a, const BiPolynomial& b) {
  a.check_field(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::string BiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [dq, dh] = it->first;
    const Scalar& c = it->second;
    const bool negative = c.is_negative();
    const Scalar mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    if (dq > 0) mono += dq == 1 ? "q" : "q^" + std::to_string(dq);
    if (dh > 0) mono += dh == 1 ? "h" : "h^" + std::to_string(dh);
    if (mono.empty()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) {
        const std::string s = mag.to_string();
        out += s.find('/') != std::string::npos ? "(" + s + ")" : s;
      }
      out += mono;
    }
  }
  return out;
}

void FractionTraits<BiPolynomial>::normalize(BiPolynomial& num, BiPolynomial& den) {
  const auto mn = num.monomial_content();
  const auto md = den.monomial_content();
  const BiPolynomial::Exponent common{std::min(mn.first, md.first), std::min(mn.second, md.second)};
  if (common != BiPolynomial::Exponent{0, 0}) {
    num = num.divided_by_monomial(common);
    den = den.divided_by_monomial(common);
  }
  // Make the denominator primitive (Q) or monic in its top term (Z/p).
  const Scalar c = den.content();
  if (!c.is_one()) {
    const Scalar inv = c.inverse();
    num *= inv;
    den *= inv;
  }
  if (!num.field().is_prime_field()) {
    // Content is positive over Q, so the sign still needs fixing.
    if (den.terms().rbegin()->second.is_negative()) {
      num = -num;
      den = -den;
    }
  }
}

}  // namespace qweyl
