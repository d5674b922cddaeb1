#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dopfactor/arith/polynomial.hpp"
#include "dopfactor/arith/rational.hpp"

namespace dopfactor {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// The block rows [r0, r0+nr), columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& a, const Polynomial<F>& b) {
  return exact_divide(a, b);
}

/// Determinant by fraction-free (Bareiss) elimination over an integral domain.
/// Every division is exact; R needs an exact_quotient overload.
template <class R>
R bareiss_determinant(Matrix<R> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == R(0)) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == R(0)) ++p;
      if (p == n) return R(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(t, prev);
      }
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  R det = m(n - 1, n - 1);
  return negate ? R(-det) : det;
}

namespace detail {

template <class R>
R cofactor_rec(const Matrix<R>& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  if (rows.empty()) return R(1);
  const std::size_t c = cols.front();
  std::vector<std::size_t> rest_cols(cols.begin() + 1, cols.end());
  R acc(0);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const R& entry = m(rows[k], c);
    if (entry == R(0)) continue;
    std::vector<std::size_t> rest_rows;
    rest_rows.reserve(rows.size() - 1);
    for (std::size_t t = 0; t < rows.size(); ++t)
      if (t != k) rest_rows.push_back(rows[t]);
    R minor = cofactor_rec(m, rest_rows, rest_cols);
    R term = entry * minor;
    acc = (k % 2 == 0) ? R(acc + term) : R(acc - term);
  }
  return acc;
}

}  // namespace detail

/// Determinant by Laplace expansion along the first column, skipping zero entries.
template <class R>
R cofactor_determinant(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = cols[i] = i;
  return detail::cofactor_rec(m, rows, cols);
}

/// Basis of the right nullspace {v : m v = 0} over a field, from the reduced row echelon form.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == F(0)) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == F(0)) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dopfactor
