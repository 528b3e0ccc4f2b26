#include "qweyl/scalar.hpp"

#include <ostream>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InvalidArgument("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "Z" + std::to_string(p_);
}

Scalar::Scalar(Field f, long value) : field_(f) {
  if (f.is_prime_field())
    residue_ = reduce(value, f.characteristic());
  else if (value != 0)
    q_ = mpq_class(value);
}

const mpq_class& Scalar::rq() const {
  static const mpq_class zero(0);
  return q_ ? *q_ : zero;
}

mpq_class& Scalar::wq() {
  if (!q_) q_.emplace(0);
  return *q_;
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f) {
  if (!f.is_prime_field()) {
    q_ = value;
    q_->canonicalize();
    return;
  }
  const std::uint32_t p = f.characteristic();
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (den == 0) throw DomainError("rational " + value.get_str() + " has no image in " + f.name());
  Scalar n(f, num.get_si());
  Scalar d(f, den.get_si());
  *this = n / d;
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? residue_ == 0 : sgn(rq()) == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? residue_ == 1 : rq() == 1;
}

mpq_class Scalar::rational() const {
  if (field_.is_prime_field()) return mpq_class(static_cast<unsigned long>(residue_));
  return rq();
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw RingMismatch("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero in " + field_.name());
  if (!field_.is_prime_field()) return Scalar(field_, mpq_class(1) / rq());
  // Extended Euclid on 64-bit integers.
  std::int64_t a = residue_, m = field_.characteristic();
  std::int64_t x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t t = a / m;
    std::int64_t r = a - t * m;
    a = m;
    m = r;
    std::int64_t nx = x0 - t * x1;
    x0 = x1;
    x1 = nx;
  }
  Scalar out;
  out.field_ = field_;
  out.residue_ = reduce(static_cast<long>(x0), field_.characteristic());
  return out;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one(field_), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_prime_field())
    out.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  else
    out.q_ = mpq_class(-rq());
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime_field()) {
    std::uint64_t s = std::uint64_t(residue_) + o.residue_;
    residue_ = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    wq() += o.rq();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime_field())
    residue_ = static_cast<std::uint32_t>(std::uint64_t(residue_) * o.residue_ % field_.characteristic());
  else
    wq() *= o.rq();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (o.is_zero()) throw DomainError("division by zero in " + field_.name());
  if (field_.is_prime_field()) return *this *= o.inverse();
  wq() /= o.rq();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_prime_field()) return a.residue_ == b.residue_;
  return a.rq() == b.rq();
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(residue_);
  return rq().get_str();
}

bool Scalar::is_negative() const { return !field_.is_prime_field() && sgn(rq()) < 0; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qweyl
