#include "qweyl/polynomial.hpp"

#include "qweyl/errors.hpp"

namespace qweyl {

std::string merge_var(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  throw RingMismatch("indeterminate mismatch: " + a + " vs " + b);
}

namespace {

void check_field(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field()))
    throw RingMismatch("polynomial field mismatch: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

Polynomial::Polynomial(Field f, std::string var) : field_(f), var_(std::move(var)) {}

Polynomial::Polynomial(Field f, std::string var, std::vector<Scalar> coeffs)
    : field_(f), var_(std::move(var)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.field() == f)) throw RingMismatch("coefficient outside " + f.name());
  trim();
}

Polynomial Polynomial::constant(const Scalar& c, std::string var) {
  return Polynomial(c.field(), std::move(var), {c});
}

Polynomial Polynomial::monomial(const Scalar& c, int degree, std::string var) {
  if (degree < 0) throw InvalidArgument("negative polynomial degree");
  std::vector<Scalar> coeffs(static_cast<std::size_t>(degree) + 1, Scalar::zero(c.field()));
  coeffs.back() = c;
  return Polynomial(c.field(), std::move(var), std::move(coeffs));
}

Polynomial Polynomial::variable(Field f, std::string var) {
  return monomial(Scalar::one(f), 1, std::move(var));
}

Polynomial Polynomial::with_var(std::string var) const {
  Polynomial out = *this;
  out.var_ = std::move(var);
  return out;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Polynomial::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

Scalar Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(field_);
  return c_[static_cast<std::size_t>(i)];
}

Scalar Polynomial::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

int Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  throw DomainError("valuation of the zero polynomial");
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  out *= leading().inverse();
  return out;
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial out = *this;
  if (k > 0) {
    out.c_.insert(out.c_.begin(), static_cast<std::size_t>(k), Scalar::zero(field_));
    return out;
  }
  if (valuation() < -k) throw DomainError("inexact division by " + var_ + "^" + std::to_string(-k));
  out.c_.erase(out.c_.begin(), out.c_.begin() + (-k));
  return out;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  return Polynomial(field_, var_, std::move(d));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = one_like(), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Scalar Polynomial::evaluate(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_field(*this, o);
  var_ = merge_var(var_, o.var_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_field(a, b);
  Polynomial out(a.field_, merge_var(a.var_, b.var_));
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  check_field(a, b);
  if (!a.is_constant() && !b.is_constant()) merge_var(a.var_, b.var_);
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  check_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const std::string var = merge_var(a.var(), b.var());
  const Field f = a.field();
  Polynomial rem = a.with_var(var);
  const int db = *b.degree();
  const Scalar inv_lead = b.leading().inverse();
  std::vector<Scalar> quot;
  if (!rem.is_zero() && *rem.degree() >= db)
    quot.assign(static_cast<std::size_t>(*rem.degree() - db + 1), Scalar::zero(f));
  while (!rem.is_zero() && *rem.degree() >= db) {
    const int shift = *rem.degree() - db;
    const Scalar factor = rem.leading() * inv_lead;
    quot[static_cast<std::size_t>(shift)] = factor;
    std::vector<Scalar>& rc = rem.c_;
    for (int i = 0; i <= db; ++i) rc[static_cast<std::size_t>(i + shift)] -= factor * b.c_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  return {Polynomial(f, var, std::move(quot)), rem};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact division of " + a.to_string() + " by " + b.to_string());
  return q;
}

bool divides(const Polynomial& d, const Polynomial& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  Polynomial g = x.monic();
  return g.with_var(merge_var(a.var(), b.var()));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  const std::string v = var_.empty() ? std::string("t") : var_;
  std::string out;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.is_negative();
    const Scalar mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string coeff = mag.to_string();
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (!mag.is_one()) out += coeff.find('/') != std::string::npos ? "(" + coeff + ")" : coeff;
    out += v;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace qweyl
