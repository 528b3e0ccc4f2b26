#include "qweyl/linalg.hpp"

#include <algorithm>
#include <climits>

namespace qweyl {

Matrix<RationalFunction> to_rational(const Matrix<LaurentPolynomial>& m) {
  return m.map([](const LaurentPolynomial& e) { return to_rational(e); });
}

Matrix<LaurentPolynomial> to_laurent(const Matrix<RationalFunction>& m) {
  return m.map([](const RationalFunction& e) { return to_laurent(e); });
}

ClearedRows clear_rows(const Matrix<LaurentPolynomial>& m) {
  ClearedRows out;
  out.poly = Matrix<Polynomial>(m.rows(), m.cols(), m.zero().body());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int low = INT_MAX;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) low = std::min(low, m(i, j).low_degree());
    if (low == INT_MAX) continue;
    out.shift += low;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPolynomial& e = m(i, j);
      if (!e.is_zero()) out.poly(i, j) = e.body().shifted(e.shift() - low);
    }
  }
  return out;
}

Scalar det_exact(const Matrix<Scalar>& m) { return det_gauss(m); }

RationalFunction det_exact(const Matrix<RationalFunction>& m) { return det_gauss(m); }

Polynomial det_exact(const Matrix<Polynomial>& m, Exec exec) { return det_bareiss(m, exec); }

LaurentPolynomial det_exact(const Matrix<LaurentPolynomial>& m, Exec exec) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape());
  const ClearedRows c = clear_rows(m);
  const Polynomial d = det_bareiss(c.poly, exec);
  if (d.is_zero()) return m.zero();
  return LaurentPolynomial(d, c.shift);
}

Matrix<Scalar> mat_inverse(const Matrix<Scalar>& m) {
  auto inv = inverse_gauss_jordan(m);
  if (!inv) throw SingularMatrix("matrix is not invertible", "0");
  return *inv;
}

Matrix<RationalFunction> mat_inverse(const Matrix<RationalFunction>& m) {
  auto inv = inverse_gauss_jordan(m);
  if (!inv) throw SingularMatrix("matrix is not invertible", "0");
  return *inv;
}

Matrix<LaurentPolynomial> mat_inverse(const Matrix<LaurentPolynomial>& m) {
  const LaurentPolynomial d = det_exact(m);
  if (!d.is_unit()) throw SingularMatrix("matrix is not invertible over Laurent polynomials", d.to_string());
  auto inv = inverse_gauss_jordan(to_rational(m));
  if (!inv) throw SingularMatrix("matrix is not invertible", d.to_string());
  Matrix<LaurentPolynomial> out = to_laurent(*inv);
  if (!mat_mul(m, out).is_identity()) throw Error("mat_inverse: product check failed");
  return out;
}

std::size_t rank_over_fractions(const Matrix<Scalar>& m) { return rank_gauss(m); }

std::size_t rank_over_fractions(const Matrix<RationalFunction>& m) { return rank_gauss(m); }

std::size_t rank_over_fractions(const Matrix<LaurentPolynomial>& m) {
  return rank_gauss(to_rational(m));
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

namespace {

Polynomial canonical_of(const Polynomial& p) {
  if (p.is_zero()) return p;
  return LaurentPolynomial(p).canonical().poly;
}

Polynomial gcd_step(const Polynomial& acc, const Polynomial& minor) {
  if (minor.is_zero()) return acc;
  return gcd(acc, canonical_of(minor));
}

}  // namespace

MinorsGcd minors_gcd(const Matrix<LaurentPolynomial>& m, std::size_t r, Exec exec) {
  if (!m.is_square()) throw DimensionError("minors_gcd of non-square " + m.shape());
  const std::size_t n = m.rows();
  if (r >= n) throw InvalidArgument("minors_gcd: r = " + std::to_string(r) + " out of range for size " + std::to_string(n));
  // Row clearing multiplies every minor by a unit, which canonical forms ignore.
  const ClearedRows c = clear_rows(m);
  const std::size_t k = n - r;
  const auto sets = subsets(n, k);
  const std::size_t per = sets.size();
  const long total = static_cast<long>(per * per);
  const Polynomial zero = c.poly.zero();

  MinorsGcd out{zero, 0};
  if (exec == Exec::serial) {
    for (long idx = 0; idx < total; ++idx) {
      const auto& rs = sets[static_cast<std::size_t>(idx) / per];
      const auto& cs = sets[static_cast<std::size_t>(idx) % per];
      out.gcd = gcd_step(out.gcd, det_bareiss(c.poly.extract(rs, cs), Exec::serial));
      ++out.minors;
      if (out.gcd.is_one()) break;
    }
    return out;
  }

  std::atomic<bool> done{false};
  std::atomic<std::size_t> evaluated{0};
  ParallelGuard guard;
#pragma omp parallel
  {
    Polynomial local = zero;
#pragma omp for schedule(dynamic, 4)
    for (long idx = 0; idx < total; ++idx) {
      if (done.load(std::memory_order_relaxed)) continue;
      guard.run([&] {
        const auto& rs = sets[static_cast<std::size_t>(idx) / per];
        const auto& cs = sets[static_cast<std::size_t>(idx) % per];
        local = gcd_step(local, det_bareiss(c.poly.extract(rs, cs), Exec::serial));
        evaluated.fetch_add(1, std::memory_order_relaxed);
        if (local.is_one()) done.store(true, std::memory_order_relaxed);
      });
    }
#pragma omp critical(qweyl_minors_gcd)
    guard.run([&] { out.gcd = out.gcd.is_zero() ? local : local.is_zero() ? out.gcd : gcd(out.gcd, local); });
  }
  guard.rethrow();
  out.minors = evaluated.load();
  return out;
}

}  // namespace qweyl
