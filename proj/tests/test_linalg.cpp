#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/parse.hpp"
#include "support.hpp"

using namespace qweyl;
using qweyl::testing::random_laurent_matrix;
using qweyl::testing::random_poly_matrix;

namespace {

const Field Q = Field::rationals();
const Field Z2 = Field::prime(2);
const Field Z3 = Field::prime(3);

using LM = Matrix<LaurentPolynomial>;
using RM = Matrix<RationalFunction>;

LaurentPolynomial L(const char* text, Field f) { return parse_laurent(text, f, "x"); }
RationalFunction R(const char* text, Field f) { return parse_rational(text, f, "x"); }

LM lm(std::initializer_list<std::initializer_list<const char*>> rows, Field f) {
  std::vector<std::vector<LaurentPolynomial>> g;
  for (auto r : rows) {
    g.emplace_back();
    for (const char* e : r) g.back().push_back(L(e, f));
  }
  return LM::from_rows(g);
}

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return m.one();
  if (n == 1) return m(0, 0);
  T out = m.zero();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 1; i < n; ++i) rs.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cs.push_back(c);
    const T term = m(0, j) * cofactor_det(m.extract(rs, cs));
    out = j % 2 ? out - term : out + term;
  }
  return out;
}

Polynomial canon(const LaurentPolynomial& f) { return f.canonical().poly; }

// gcd of all minors of the given order by exhaustive cofactor determinants.
Polynomial brute_minors_gcd(const LM& m, std::size_t order) {
  Polynomial g = m.zero().body().zero_like();
  for (const auto& rs : subsets(m.rows(), order))
    for (const auto& cs : subsets(m.cols(), order)) g = gcd(g, canon(cofactor_det(m.extract(rs, cs))));
  return g.is_zero() ? g : LaurentPolynomial(g).canonical().poly;
}

}  // namespace

TEST_CASE("determinant routes agree with cofactor expansion") {
  std::mt19937 rng(23);
  for (Field f : {Q, Z2, Z3, Field::prime(101)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const LM m = random_laurent_matrix(rng, f, n, 2, 2);
      const LaurentPolynomial expect = cofactor_det(m);
      CHECK(det_exact(m, Exec::serial) == expect);
      CHECK(det_exact(m, Exec::parallel) == expect);
      CHECK(det_berkowitz(m) == expect);
      CHECK(det_gauss(to_rational(m)) == to_rational(expect));

      const auto pm = random_poly_matrix(rng, f, n, 3);
      CHECK(det_bareiss(pm, Exec::serial) == cofactor_det(pm));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const LM a = random_laurent_matrix(rng, Z3, 4, 2, 1), b = random_laurent_matrix(rng, Z3, 4, 2, 1);
    CHECK(det_exact(mat_mul(a, b, Exec::serial)) == det_exact(a) * det_exact(b));
  }
}

TEST_CASE("serial and parallel products coincide") {
  std::mt19937 rng(31);
  const LM a = random_laurent_matrix(rng, Z3, 12, 2, 2), b = random_laurent_matrix(rng, Z3, 12, 2, 2);
  CHECK(mat_mul(a, b, Exec::serial) == mat_mul(a, b, Exec::parallel));
  CHECK_THROWS_AS(mat_mul(a, LM(3, 2, a.zero())), DimensionError);
}

TEST_CASE("characteristic polynomial") {
  const LaurentPolynomial zero = L("0", Q);
  const auto cp0 = char_poly(LM(2, 2, zero));
  CHECK(cp0.degree() == 2);
  CHECK(cp0.coeff(2).is_one());
  CHECK(cp0.coeff(1).is_zero());
  CHECK(cp0.coeff(0).is_zero());

  // diag(x, 1/x): λ^2 - (x + 1/x)λ + 1
  const auto cpd = char_poly(lm({{"x", "0"}, {"0", "x^-1"}}, Q));
  CHECK(cpd.coeff(0).is_one());
  CHECK(cpd.coeff(1) == L("-x - x^-1", Q));

  // Against det(cI - M) at several constants c.
  std::mt19937 rng(37);
  for (std::size_t n = 1; n <= 5; ++n) {
    const LM m = random_laurent_matrix(rng, Q, n, 2, 1);
    const auto cp = char_poly(m);
    CHECK(cp.degree() == static_cast<int>(n));
    for (long c = -2; c <= 2; ++c) {
      const LaurentPolynomial lc = LaurentPolynomial::constant(Scalar(Q, c), "x");
      LaurentPolynomial value = zero, power = zero.one_like();
      for (int i = 0; i <= *cp.degree(); ++i, power = power * lc) value += cp.coeff(i) * power;
      CHECK(value == det_exact(LM::identity(n, zero.one_like()).scaled(lc) - m));
    }
  }
}

TEST_CASE("exact inverses") {
  const LM v = lm({{"1", "0"}, {"1", "1"}}, Z2);
  CHECK(mat_inverse(v) == v);

  const LM u = lm({{"x", "1"}, {"0", "x"}}, Q);
  const LM ui = mat_inverse(u);
  CHECK(ui == lm({{"x^-1", "-x^-2"}, {"0", "x^-1"}}, Q));
  CHECK(mat_mul(u, ui).is_identity());

  const LM not_unit = lm({{"x + 1", "0"}, {"0", "1"}}, Q);
  CHECK_THROWS_AS(mat_inverse(not_unit), SingularMatrix);
  try {
    mat_inverse(not_unit);
  } catch (const SingularMatrix& e) {
    CHECK(e.determinant() == "x + 1");
  }
  const RM rinv = mat_inverse(to_rational(not_unit));
  CHECK(rinv(0, 0) == R("1/(x + 1)", Q));
  CHECK_THROWS_AS(mat_inverse(lm({{"1", "x"}, {"1", "x"}}, Q)), SingularMatrix);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const RM m = to_rational(random_laurent_matrix(rng, Z3, 3, 2, 1));
    if (det_exact(m).is_zero()) continue;
    CHECK(mat_mul(m, mat_inverse(m)).is_identity());
  }
}

TEST_CASE("rank over the fraction field") {
  CHECK(rank_over_fractions(lm({{"1", "x"}, {"x^-1", "1"}}, Q)) == 1);
  CHECK(rank_over_fractions(lm({{"1", "x"}, {"1", "1"}}, Q)) == 2);
  CHECK(rank_over_fractions(LM(3, 3, L("0", Z2))) == 0);
  // x + 1 = x - 1 over Z2, so these rows are dependent there only.
  CHECK(rank_over_fractions(lm({{"x + 1", "1"}, {"x^2 - 1", "x - 1"}}, Z2)) == 1);
  CHECK(rank_over_fractions(lm({{"x + 1", "1"}, {"x^2 - 1", "x + 1"}}, Q)) == 2);

  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const LM m = random_laurent_matrix(rng, Q, 4, 1, 1);
    CHECK((rank_over_fractions(m) == 4) == !det_exact(m).is_zero());
  }
}

TEST_CASE("subsets are lexicographic and complete") {
  const auto s = subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == std::vector<std::size_t>{0, 1});
  CHECK(s[1] == std::vector<std::size_t>{0, 2});
  CHECK(s.back() == std::vector<std::size_t>{2, 3});
  CHECK(subsets(5, 0).size() == 1);
  CHECK(subsets(3, 4).empty());
  CHECK(subsets(10, 3).size() == 120);
}

TEST_CASE("minors gcd against exhaustive enumeration") {
  std::mt19937 rng(47);
  for (Field f : {Q, Z2, Z3}) {
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t n = 3 + trial % 2;
      LM m = random_laurent_matrix(rng, f, n, 2, 1);
      // A shared factor in one row keeps some gcds away from 1.
      const LaurentPolynomial factor = L("x + 1", f);
      for (std::size_t j = 0; j < n; ++j) m(0, j) = m(0, j) * factor;
      for (std::size_t r = 0; r < n; ++r) {
        const MinorsGcd s = minors_gcd(m, r, Exec::serial), p = minors_gcd(m, r, Exec::parallel);
        CHECK(s.gcd == brute_minors_gcd(m, n - r));
        CHECK(p.gcd == s.gcd);
      }
    }
  }
}

TEST_CASE("minors gcd edge cases") {
  const LM id = LM::identity(2, L("1", Q));
  CHECK(minors_gcd(id, 1).gcd.is_one());
  const LM m = lm({{"x^2 + x", "0"}, {"0", "x^-3"}}, Q);
  CHECK(minors_gcd(m, 0).gcd == det_exact(m).canonical().poly);
  CHECK(minors_gcd(LM(3, 3, L("0", Q)), 1).gcd.is_zero());
  const LM chain = lm({{"x - 1", "0", "0"}, {"0", "x^2 - 1", "0"}, {"0", "0", "0"}}, Q);
  CHECK(minors_gcd(chain, 0).gcd.is_zero());
  CHECK(minors_gcd(chain, 1).gcd == parse_polynomial("x^3 - x^2 - x + 1", Q, "x"));
  CHECK(minors_gcd(chain, 2).gcd == parse_polynomial("x - 1", Q, "x"));
}

TEST_CASE("row clearing keeps the determinant") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const LM m = random_laurent_matrix(rng, Z3, 4, 2, 3);
    const ClearedRows c = clear_rows(m);
    const LaurentPolynomial back =
        LaurentPolynomial(det_exact(c.poly)) * LaurentPolynomial::monomial(Scalar::one(Z3), c.shift, "x");
    CHECK(back == det_exact(m));
  }
}
