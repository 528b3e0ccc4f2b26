#pragma once

#include <optional>
#include <string>

#include "qweyl/fraction.hpp"
#include "qweyl/laurent.hpp"
#include "qweyl/polynomial.hpp"

namespace qweyl {

// Univariate fractions are kept reduced: coprime with a monic denominator.
template <>
struct FractionTraits<Polynomial> {
  static void normalize(Polynomial& num, Polynomial& den);
};

// Element of K(x).
using RationalFunction = Fraction<Polynomial>;

RationalFunction to_rational(const LaurentPolynomial& f);
RationalFunction rational_constant(const Scalar& c, std::string var = {});

// Laurent value when the reduced denominator is a monomial.
std::optional<LaurentPolynomial> try_laurent(const RationalFunction& f);
// As try_laurent, but throws DomainError for other denominators.
LaurentPolynomial to_laurent(const RationalFunction& f);

// Rational functions print through the Laurent form when possible.
std::string format(const RationalFunction& f);

}  // namespace qweyl
