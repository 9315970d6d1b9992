#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace chambers {

template <typename T>
using Vector = std::vector<T>;

template <typename T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <typename T>
T norm_squared(const Vector<T>& a) {
  return dot(a, a);
}

template <typename T>
Vector<T> scaled(const Vector<T>& a, const T& factor) {
  Vector<T> r(a.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * factor;
  return r;
}

template <typename T>
Vector<T> negated(const Vector<T>& a) {
  return scaled(a, T(-1));
}

template <typename T>
Vector<T> sum(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sum: size mismatch");
  Vector<T> r(a.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename T>
Vector<T> difference(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("difference: size mismatch");
  Vector<T> r(a.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename T>
bool is_zero_vector(const Vector<T>& a) {
  for (const T& x : a)
    if (sign_of(x) != 0) return false;
  return true;
}

// Dense row-major matrix over an arbitrary field.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix from_rows(const std::vector<Vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<T> row(std::size_t i) const {
    Vector<T> r(cols_, T(0));
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Vector<T> apply(const Vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    Vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

namespace detail {

// Fraction-free-ish forward elimination on an augmented matrix; returns the
// pivot column of each pivot row. Works for any exact field; for floating
// point the largest-entry pivot choice doubles as partial pivoting.
template <typename T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, std::size_t lhs_cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < lhs_cols && r < m.rows(); ++c) {
    std::size_t best = r;
    bool found = false;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (sign_of(m(i, c)) != 0) {
        if (!found) {
          best = i;
          found = true;
        } else {
          T a = m(i, c) < T(0) ? T(-m(i, c)) : m(i, c);
          T b = m(best, c) < T(0) ? T(-m(best, c)) : m(best, c);
          if (a > b) best = i;
        }
      }
    }
    if (!found) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    T inv_pivot = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = T(m(r, j) * inv_pivot);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sign_of(m(i, c)) == 0) continue;
      T factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = T(m(i, j) - factor * m(r, j));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace detail

template <typename T>
std::size_t rank(Matrix<T> m) {
  return detail::row_reduce(m, m.cols()).size();
}

// Solves A x = b. Returns one solution if the system is consistent
// (underdetermined systems get free variables set to zero).
template <typename T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: size mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = detail::row_reduce(aug, a.cols());
  for (std::size_t i = pivots.size(); i < a.rows(); ++i)
    if (sign_of(aug(i, a.cols())) != 0) return std::nullopt;
  Vector<T> x(a.cols(), T(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

// Basis of the kernel of A.
template <typename T>
std::vector<Vector<T>> nullspace(const Matrix<T>& a) {
  Matrix<T> m = a;
  std::vector<std::size_t> pivots = detail::row_reduce(m, m.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector<T> v(a.cols(), T(0));
    v[free_col] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = T(-m(r, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace chambers
