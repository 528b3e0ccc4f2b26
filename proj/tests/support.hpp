#pragma once

// Random fixtures and small helpers shared by the tests and the benchmarks.

#include <random>
#include <string>
#include <vector>

#include "qweyl/braid.hpp"
#include "qweyl/laurent.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/matrix.hpp"
#include "qweyl/polynomial.hpp"

namespace qweyl::testing {

inline Polynomial random_poly(std::mt19937& rng, Field f, int max_degree, const std::string& var = "x") {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Scalar> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(f, coef(rng));
  return Polynomial(f, var, c);
}

inline LaurentPolynomial random_laurent(std::mt19937& rng, Field f, int max_degree, int max_shift,
                                        const std::string& var = "x") {
  std::uniform_int_distribution<int> sh(-max_shift, max_shift);
  return LaurentPolynomial(random_poly(rng, f, max_degree, var), sh(rng));
}

inline Matrix<LaurentPolynomial> random_laurent_matrix(std::mt19937& rng, Field f, std::size_t n, int max_degree,
                                                       int max_shift, const std::string& var = "x") {
  Matrix<LaurentPolynomial> m(n, n, LaurentPolynomial(Polynomial(f, var)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_laurent(rng, f, max_degree, max_shift, var);
  return m;
}

inline Matrix<Polynomial> random_poly_matrix(std::mt19937& rng, Field f, std::size_t n, int max_degree,
                                             const std::string& var = "x") {
  Matrix<Polynomial> m(n, n, Polynomial(f, var));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, f, max_degree, var);
  return m;
}

// Random word text over s/t letters on `strands` strands.
inline std::string random_word(std::mt19937& rng, std::size_t strands, std::size_t length, bool virtual_letters,
                               bool inverses) {
  std::uniform_int_distribution<std::size_t> idx(1, strands - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::string out;
  for (std::size_t i = 0; i < length; ++i) {
    if (!out.empty()) out += ' ';
    const bool v = virtual_letters && coin(rng);
    out += (v ? 't' : 's') + std::to_string(idx(rng));
    if (!v && inverses && coin(rng)) out += "^-1";
  }
  return out;
}

inline Matrix<LaurentPolynomial> minus_identity(Matrix<LaurentPolynomial> m) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= m.one();
  return m;
}

// Reduced Burau image of a classical word on n strands, (n-1) x (n-1).
inline Matrix<LaurentPolynomial> reduced_burau(const BraidWord& w, const LaurentPolynomial& t) {
  const std::size_t m = w.strands - 1;
  const LaurentPolynomial one = t.one_like();
  Matrix<LaurentPolynomial> out = Matrix<LaurentPolynomial>::identity(m, one);
  for (const Letter& l : w.letters) {
    Matrix<LaurentPolynomial> g = Matrix<LaurentPolynomial>::identity(m, one);
    const std::size_t i = l.index - 1;
    g(i, i) = -t;
    if (i > 0) g(i, i - 1) = t;
    if (i + 1 < m) g(i, i + 1) = one;
    if (l.exponent < 0) g = mat_inverse(g);
    out = mat_mul(out, g, Exec::serial);
  }
  return out;
}

// Alexander polynomial of a knot closure: det(I - reduced Burau) / (1 + t + ... + t^{n-1}).
inline Polynomial alexander_oracle(const BraidWord& w, const LaurentPolynomial& t) {
  const Matrix<LaurentPolynomial> r = reduced_burau(w, t);
  const LaurentPolynomial det = det_exact(Matrix<LaurentPolynomial>::identity(r.rows(), t.one_like()) - r);
  LaurentPolynomial geo = t.zero_like(), power = t.one_like();
  for (std::size_t i = 0; i < w.strands; ++i, power = power * t) geo += power;
  return exact_div(det, geo).canonical().poly;
}

}  // namespace qweyl::testing
