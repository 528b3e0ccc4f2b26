#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/rational_function.hpp"

namespace qweyl {

inline std::string entry_string(const RationalFunction& f) { return format(f); }
template <class T>
std::string entry_string(const T& t) {
  return t.to_string();
}

// Dense row-major matrix over a commutative ring T.
//
// Every matrix carries a zero element of its ring so that empty or freshly
// sized matrices still know their field and indeterminate.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero.zero_like()), a_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n, one.zero_like());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one.one_like();
    return m;
  }

  // Rows must be non-empty and of equal length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DimensionError("from_rows needs a non-empty grid");
    Matrix m(rows.size(), rows[0].size(), rows[0][0].zero_like());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }
  const T& zero() const { return zero_; }
  T one() const { return zero_.one_like(); }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix out(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix extract(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix out(rs.size(), cs.size(), zero_);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_, f(zero_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& e : out.a_) e = -e;
    return out;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  Matrix scaled(const T& s) const {
    Matrix out = *this;
    for (auto& e : out.a_) e = s * e;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += entry_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

  std::vector<std::vector<std::string>> to_string_grid() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(entry_string((*this)(i, j)));
    return out;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("shape mismatch: " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0, cols_ = 0;
  T zero_{};
  std::vector<T> a_;
};

}  // namespace qweyl
