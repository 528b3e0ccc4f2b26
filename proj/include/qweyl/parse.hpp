#pragma once

#include <string>
#include <string_view>

#include "qweyl/laurent.hpp"
#include "qweyl/polynomial.hpp"
#include "qweyl/rational_function.hpp"

namespace qweyl {

// Parses ring values such as "2y^3 + y + 1", "(x^10 + 1)/x^10", "1/(h - 1)".
//
// Grammar: integers, one single-letter indeterminate, + - * / and ^ with an
// integer exponent, parentheses, and juxtaposition as product. Every
// indeterminate in the text must agree with `var` when `var` is non-empty.
// Throws ParseError on malformed text and DomainError on division by zero.
RationalFunction parse_rational(std::string_view text, Field f, const std::string& var = {});

// As parse_rational, but the value must be a Laurent polynomial or polynomial.
LaurentPolynomial parse_laurent(std::string_view text, Field f, const std::string& var = {});
Polynomial parse_polynomial(std::string_view text, Field f, const std::string& var = {});

}  // namespace qweyl
