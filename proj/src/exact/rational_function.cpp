#include <algorithm>
#include "qweyl/rational_function.hpp"

namespace qweyl {

void FractionTraits<Polynomial>::normalize(Polynomial& num, Polynomial& den) {
  const Polynomial g = gcd(num, den);
  if (!g.is_one()) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Scalar lead = den.leading();
  if (!lead.is_one()) {
    const Scalar inv = lead.inverse();
    num *= inv;
    den *= inv;
  }
}

RationalFunction to_rational(const LaurentPolynomial& f) {
  if (f.shift() >= 0) return RationalFunction(f.body().shifted(f.shift()));
  const Polynomial den = Polynomial::monomial(Scalar::one(f.field()), -f.shift(), f.var());
  return RationalFunction(f.body(), den);
}

RationalFunction rational_constant(const Scalar& c, std::string var) {
  return RationalFunction(Polynomial::constant(c, std::move(var)));
}

std::optional<LaurentPolynomial> try_laurent(const RationalFunction& f) {
  const Polynomial& den = f.den();
  if (den.coeffs().size() > 1 && den.valuation() != *den.degree()) return std::nullopt;
  const int k = *den.degree();
  // Reduced denominators are monic, so den == x^k here.
  return LaurentPolynomial(f.num(), -k);
}

LaurentPolynomial to_laurent(const RationalFunction& f) {
  auto l = try_laurent(f);
  if (!l) throw DomainError(f.to_string() + " is not a Laurent polynomial");
  return *l;
}

std::string format(const RationalFunction& f) {
  if (auto l = try_laurent(f)) return l->to_string();
  const auto wrap = [](const Polynomial& p) {
    return p.coeffs().size() - std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                              [](const Scalar& c) { return c.is_zero(); }) > 1 ||
                   p.leading().is_negative()
               ? "(" + p.to_string() + ")"
               : p.to_string();
  };
  return wrap(f.num()) + "/" + wrap(f.den());
}

}  // namespace qweyl
