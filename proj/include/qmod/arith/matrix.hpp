#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qmod/arith/error.hpp"
#include "qmod/arith/field.hpp"

namespace qmod {

/// Dense row-major matrix over a field descriptor F.
template <Field F>
class DenseMatrix {
 public:
  using value_type = typename F::value_type;

  DenseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

  DenseMatrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DomainError("matrix entry count does not match shape");
    }
  }

  static DenseMatrix identity(F field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  /// Rows given as vectors of equal length `cols`.
  static DenseMatrix from_rows(F field, std::size_t cols, const std::vector<std::vector<value_type>>& rows) {
    DenseMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const value_type> row(std::size_t i) const {
    return std::span<const value_type>(entries_).subspan(i * cols_, cols_);
  }
  const std::vector<value_type>& entries() const { return entries_; }

  DenseMatrix transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    DenseMatrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a(i, k);
        if (a.field_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<value_type> apply(std::span<const value_type> x) const {
    if (x.size() != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<value_type> y(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Throws DomainError if any entry belongs to a different field.
  void check_single_field() const {
    for (const auto& e : entries_) {
      if (!field_.contains(e)) throw DomainError("matrix entries from mixed fields");
    }
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> entries_;
};

template <Field F>
struct Echelon {
  DenseMatrix<F> reduced;             // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <Field F>
Echelon<F> row_reduce(DenseMatrix<F> m) {
  m.check_single_field();
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && field.is_zero(m(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
    const auto inv = field.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || field.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const DenseMatrix<F>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of the right kernel, one vector per free column in increasing order;
/// each vector has a 1 in its free column and zeros in the other free columns.
template <Field F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const DenseMatrix<F>& m) {
  const auto ech = row_reduce(m);
  const F& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
typename F::value_type determinant(DenseMatrix<F> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  m.check_single_field();
  const F& field = m.field();
  auto det = field.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && field.is_zero(m(pr, col))) ++pr;
    if (pr == n) return field.zero();
    if (pr != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    const auto inv = field.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (field.is_zero(m(i, col))) continue;
      const auto factor = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - factor * m(col, j);
    }
  }
  return det;
}

/// Some solution of A x = b, or nullopt when the system is inconsistent.
template <Field F>
std::optional<std::vector<typename F::value_type>> solve(const DenseMatrix<F>& a,
                                                         std::span<const typename F::value_type> b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
  const F& field = a.field();
  DenseMatrix<F> aug(field, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = row_reduce(std::move(aug));
  std::vector<typename F::value_type> x(a.cols(), field.zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;
    x[ech.pivots[r]] = ech.reduced(r, a.cols());
  }
  return x;
}

}  // namespace qmod
