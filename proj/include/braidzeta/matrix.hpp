#ifndef BRAIDZETA_MATRIX_HPP
#define BRAIDZETA_MATRIX_HPP

#include <atomic>
#include <cstddef>
#include <vector>

#include "braidzeta/poly_s.hpp"
#include "braidzeta/rational.hpp"

namespace braidzeta {

/// Dense row-major matrix over an exact coefficient ring (LaurentPoly or
/// PolyS in practice).
template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  T trace() const {
    T t{};
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix pow(unsigned long k) const {
    Matrix r = identity(rows_), base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  template <typename Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    Matrix<decltype(fn(std::declval<const T&>()))> r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
    return r;
  }

  friend Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j)
        for (size_t k = 0; k < b.rows_; ++k)
          for (size_t l = 0; l < b.cols_; ++l)
            r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    return r;
  }

private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

using LaurentMatrix = Matrix<LaurentPoly>;
using PolySMatrix = Matrix<PolyS>;

/// Fraction-free Bareiss determinant over an integral domain with exact
/// division. Every intermediate division is exact; a failure there is an
/// implementation bug, surfaced as NonExactDivision. An optional cancel
/// flag aborts long eliminations with Cancelled.
template <typename T>
T det_fraction_free(Matrix<T> m, const std::atomic<bool>* cancel = nullptr) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (cancel && cancel->load(std::memory_order_relaxed))
      throw Cancelled("determinant computation cancelled");
    if (m(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return T();  // singular
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Cofactor-expansion determinant; test oracle for small matrices.
template <typename T>
T det_cofactor(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T det{};
  for (size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t c = 0, mc = 0; c < n; ++c)
        if (c != j) minor(i - 1, mc++) = m(i, c);
    T term = m(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// det(I - M s) as a PolyS, via fraction-free elimination over Λ[s].
inline PolyS char_det(const LaurentMatrix& m, const std::atomic<bool>* cancel = nullptr) {
  const size_t n = m.rows();
  PolySMatrix a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<LaurentPoly> c{i == j ? LaurentPoly(1) : LaurentPoly(), -m(i, j)};
      a(i, j) = PolyS(std::move(c));
    }
  return det_fraction_free(std::move(a), cancel);
}

} // namespace braidzeta

#endif
