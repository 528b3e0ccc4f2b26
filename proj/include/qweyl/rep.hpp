#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/matrix.hpp"
#include "qweyl/rational_function.hpp"

namespace qweyl {

// A pair of k x k matrices (U, V) meant to satisfy UV - qVU = I. Entries are
// rational functions in at most one indeterminate over `field`.
struct MatrixRep {
  std::string name;
  Field field;
  std::string var;  // empty when every entry is a constant
  Matrix<RationalFunction> u, v;
  RationalFunction q;

  std::size_t dim() const { return u.rows(); }
  // True when every entry of U and V is a Laurent polynomial.
  bool laurent_entries() const;
  std::string ring_name() const;
};

struct RepReport {
  bool ok = true;
  std::string failure;  // first failing check, empty when ok
};

// Checks UV - qVU = I entrywise and that det U, det V are units (nonzero
// monomials for Laurent entries, nonzero otherwise).
RepReport validate_rep(const MatrixRep& r);

// Throws InvalidArgument when q = 1 and n is nonzero in the field: the trace
// of UV - VU is 0 while the trace of I is n.
void check_trace_obstruction(Field f, std::size_t n, const RationalFunction& q);

// Upper bidiagonal u (diagonal x, superdiagonal a_i) and lower bidiagonal v
// (diagonal y, subdiagonal i/a_i) over Z/p with p | n; q = 1.
MatrixRep family_char_p_bidiagonal(std::size_t n, std::uint32_t p, const RationalFunction& x,
                                   const RationalFunction& y, const std::vector<RationalFunction>& a);

// Coefficients k_r of 1/I' in K[x]/(x^n) for I = i_0 + i_1 x + ...
std::vector<RationalFunction> truncated_k_sequence(const std::vector<RationalFunction>& i_coeffs, std::size_t n);

// u(f) = f'/I' + J f and v(f) = I f on K[x]/(x^n), as matrices acting on
// coordinate columns in the basis 1, x, ..., x^{n-1}; q = 1.
MatrixRep family_truncated(std::size_t n, std::uint32_t p, const std::vector<RationalFunction>& i_coeffs,
                           const std::vector<RationalFunction>& j_coeffs);

// Solution of the diagonal conditions for the lower/upper bidiagonal q-family:
// beta_i = b_i d_i (i = 1..n-1) and the product a c.
struct QBidiagonalSolution {
  std::vector<RationalFunction> beta;
  RationalFunction ac;
};
QBidiagonalSolution solve_q_bidiagonal(std::size_t n, const RationalFunction& q);

// u lower bidiagonal with diagonal q^{n-i} a and subdiagonal b_i; v upper
// bidiagonal with diagonal q^{n-i} c and superdiagonal beta_i / b_i.
// p = 0 selects the rationals.
MatrixRep family_q_bidiagonal(std::size_t n, std::uint32_t p, const RationalFunction& q, const RationalFunction& a,
                              const std::vector<RationalFunction>& b);

// The upper triangular pair with diagonals q^{n-1}a, ..., a and c, ..., q^{n-1}c,
// superdiagonals b^{n-2}d, ..., d and e, (q/b)e, ..., (q/b)^{n-2}e, where
// c = 1/(a q^{n-1} (1 - q)).
MatrixRep family_q_upper(std::size_t n, std::uint32_t p, const RationalFunction& q, const RationalFunction& a,
                         const RationalFunction& b, const RationalFunction& d, const RationalFunction& e);

MatrixRep explicit_rep(std::string name, std::uint32_t p, const std::vector<std::vector<RationalFunction>>& u,
                       const std::vector<std::vector<RationalFunction>>& v, const RationalFunction& q);

// Family name, prime, dimension and parameter strings, as read from JSON:
//   {"family":"char_p_bidiagonal","p":3,"n":3,"params":{"x":"1","y":"y","a":["1","1"]}}
struct RepSpec {
  std::string family;
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::string json_params;  // the "params" object, serialized
};

RepSpec parse_rep_spec(const std::string& json_text);
// Builds the family (validate_rep is separate); throws InvalidArgument or
// ParseError on bad specs.
MatrixRep build_rep(const RepSpec& spec);
// "kishino3" or "flat2"; nullopt for other names.
std::optional<RepSpec> builtin_rep_spec(const std::string& name);

}  // namespace qweyl
