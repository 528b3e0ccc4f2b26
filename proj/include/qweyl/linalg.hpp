#pragma once

#include <omp.h>

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

#include "qweyl/laurent.hpp"
#include "qweyl/matrix.hpp"
#include "qweyl/poly_over.hpp"
#include "qweyl/rational_function.hpp"

namespace qweyl {

// Kernels that have an OpenMP version keep a plain serial one next to it; the
// serial path is the reference the tests and benchmarks compare against.
enum class Exec { serial, parallel };

// First exception thrown inside an OpenMP region, rethrown after it ends.
class ParallelGuard {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!err_) err_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr err_;
};

namespace detail {
// Below this size the OpenMP fork costs more than it saves.
inline constexpr std::size_t kParallelMin = 8;
}  // namespace detail

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b, Exec exec = Exec::parallel) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: " + a.shape() + " times " + b.shape());
  Matrix<T> out(a.rows(), b.cols(), a.zero());
  const long n = static_cast<long>(a.rows());
  const bool par = exec == Exec::parallel && a.rows() >= detail::kParallelMin;
  ParallelGuard guard;
#pragma omp parallel for schedule(dynamic) if (par)
  for (long i = 0; i < n; ++i) {
    guard.run([&] {
      const auto r = static_cast<std::size_t>(i);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const T& aik = a(r, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
          if (!b(k, j).is_zero()) out(r, j) += aik * b(k, j);
      }
    });
  }
  guard.rethrow();
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return mat_mul(a, b);
}

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
  return a + b;
}
template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
  return a - b;
}
template <class T>
Matrix<T> scalar_mul(const T& s, const Matrix<T>& m) {
  return m.scaled(s);
}

// Determinant by Gaussian elimination over a field (Scalar, RationalFunction,
// BiFraction).
template <class F>
F det_gauss(Matrix<F> m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape());
  const std::size_t n = m.rows();
  F det = m.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return m.zero();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    const F inv = m.one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Fraction-free (Bareiss) determinant over an integral domain with exact
// division: Polynomial or LaurentPolynomial. Row updates of each step run in
// parallel.
template <class R>
R det_bareiss(Matrix<R> m, Exec exec = Exec::parallel) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape());
  const std::size_t n = m.rows();
  if (n == 0) return m.one();
  R prev = m.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return m.zero();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    const bool par = exec == Exec::parallel && n - k >= detail::kParallelMin;
    const long lo = static_cast<long>(k + 1), hi = static_cast<long>(n);
    ParallelGuard guard;
#pragma omp parallel for schedule(dynamic) if (par)
    for (long ii = lo; ii < hi; ++ii) {
      guard.run([&] {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        m(i, k) = m.zero();
      });
    }
    guard.rethrow();
    prev = m(k, k);
  }
  R det = m(n - 1, n - 1);
  return negate ? -det : det;
}

// Coefficients of det(λI - m), division-free (Berkowitz), over any
// commutative ring.
template <class R>
PolyOver<R> char_poly(const Matrix<R>& m) {
  if (!m.is_square()) throw DimensionError("char_poly of non-square " + m.shape());
  const std::size_t n = m.rows();
  const R zero = m.zero(), one = m.one();
  if (n == 0) return PolyOver<R>(zero, {one});
  // vect holds coefficients from λ^r down to λ^0 for the leading r x r block.
  std::vector<R> vect{one, -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<R> t(r + 2, zero);
    t[0] = one;
    t[1] = -m(r, r);
    std::vector<R> cur(r, zero);
    for (std::size_t i = 0; i < r; ++i) cur[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * cur[i];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<R> next(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * cur[j];
        cur = std::move(next);
      }
    }
    std::vector<R> nv(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nv[i] += t[i - j] * vect[j];
    vect = std::move(nv);
  }
  std::vector<R> low_first(vect.rbegin(), vect.rend());
  return PolyOver<R>(zero, std::move(low_first));
}

// Division-free determinant via the characteristic polynomial.
template <class R>
R det_berkowitz(const Matrix<R>& m) {
  const PolyOver<R> cp = char_poly(m);
  const R c0 = cp.coeff(0);
  return m.rows() % 2 == 0 ? c0 : -c0;
}

// Gauss-Jordan inverse over a field; nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse_gauss_jordan(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square " + m.shape());
  const std::size_t n = m.rows();
  Matrix<F> a = m, inv = Matrix<F>::identity(n, m.one());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const F pinv = m.one() / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * pinv;
      inv(c, j) = inv(c, j) * pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const F f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Rank by elimination over a field.
template <class F>
std::size_t rank_gauss(Matrix<F> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const F inv = m.one() / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const F f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Entry conversions between Laurent and rational-function matrices.
Matrix<RationalFunction> to_rational(const Matrix<LaurentPolynomial>& m);
// Throws DomainError if an entry has a non-monomial denominator.
Matrix<LaurentPolynomial> to_laurent(const Matrix<RationalFunction>& m);

// A Laurent matrix with each row multiplied by the unit x^{-low}, so that all
// entries are polynomials. det(original) = det(poly) * x^shift.
struct ClearedRows {
  Matrix<Polynomial> poly;
  int shift = 0;
};
ClearedRows clear_rows(const Matrix<LaurentPolynomial>& m);

// det_exact: Gauss over fields, Bareiss over K[x], and row clearing followed
// by Bareiss for K[x, 1/x].
Scalar det_exact(const Matrix<Scalar>& m);
RationalFunction det_exact(const Matrix<RationalFunction>& m);
Polynomial det_exact(const Matrix<Polynomial>& m, Exec exec = Exec::parallel);
LaurentPolynomial det_exact(const Matrix<LaurentPolynomial>& m, Exec exec = Exec::parallel);

// Exact inverses. Throws SingularMatrix carrying the determinant when it is
// not a unit of the entry ring (for Laurent entries: a nonzero monomial).
Matrix<Scalar> mat_inverse(const Matrix<Scalar>& m);
Matrix<RationalFunction> mat_inverse(const Matrix<RationalFunction>& m);
Matrix<LaurentPolynomial> mat_inverse(const Matrix<LaurentPolynomial>& m);

std::size_t rank_over_fractions(const Matrix<Scalar>& m);
std::size_t rank_over_fractions(const Matrix<RationalFunction>& m);
std::size_t rank_over_fractions(const Matrix<LaurentPolynomial>& m);

// Canonical gcd of all (N-r) x (N-r) minors; the zero polynomial when every
// minor vanishes. Minors are enumerated as (row subset, column subset) pairs
// in lexicographic order; the parallel path splits that range and stops early
// once the running gcd is 1.
struct MinorsGcd {
  Polynomial gcd;        // monic with nonzero constant term, or zero
  std::size_t minors = 0;  // minors actually evaluated
};
MinorsGcd minors_gcd(const Matrix<LaurentPolynomial>& m, std::size_t r, Exec exec = Exec::parallel);

// Lexicographic k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace qweyl
