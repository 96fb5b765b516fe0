/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over a field type F.
 *
 * F must provide +, -, *, /, unary -, construction from long, and a free
 * function is_zero(const F&). Pivot rows are chosen by pivot_cost(), which
 * keeps intermediate rational functions small for F = Scalar.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfkit/modp.hpp"
#include "hopfkit/scalar.hpp"

namespace hopfkit {

inline std::size_t pivot_cost(const Scalar& s) { return s.complexity(); }
inline std::size_t pivot_cost(ModP) { return 0; }

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<F> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  void append_row(const std::vector<F>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }
  bool is_zero() const {
    for (const auto& x : data_) {
      if (!hopfkit::is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (hopfkit::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!hopfkit::is_zero(b(k, j))) r(i, j) += x * b(k, j);
        }
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  Matrix scaled(const F& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> out(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!hopfkit::is_zero((*this)(i, k)) && !hopfkit::is_zero(v[k])) out[i] += (*this)(i, k) * v[k];
      }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// In-place reduced row echelon form; columns are scanned left to right.
/// Returns the pivot columns; nonzero rows come first and pivots equal 1.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = next_row; r < m.rows(); ++r) {
      if (is_zero(m(r, c))) continue;
      if (!best || pivot_cost(m(r, c)) < pivot_cost(m(*best, c))) best = r;
    }
    if (!best) continue;
    if (*best != next_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(*best, k), m(next_row, k));
    F inv = F(1) / m(next_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (!is_zero(m(next_row, k))) m(next_row, k) = m(next_row, k) * inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row || is_zero(m(r, c))) continue;
      F factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!is_zero(m(next_row, k))) m(r, k) -= factor * m(next_row, k);
      }
    }
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = F(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

template <class F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = c; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      if (!best || pivot_cost(m(r, c)) < pivot_cost(m(*best, c))) best = r;
    }
    if (!best) return F(0);
    if (*best != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(*best, k), m(c, k));
      det = -det;
    }
    det = det * m(c, c);
    F inv = F(1) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      F factor = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (!is_zero(m(c, k))) m(r, k) -= factor * m(c, k);
      }
    }
  }
  return det;
}

}  // namespace hopfkit
