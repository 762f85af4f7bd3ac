#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tlq/sparse_matrix.hpp"

namespace tlq {

template <class F>
using DenseMatrix = std::vector<std::vector<F>>;

template <class F>
using DenseVector = std::vector<F>;

/// Reduced row echelon form over an exact field.
template <class F>
struct Echelon {
  DenseMatrix<F> rows;        ///< nonzero rows only, pivot entries equal to one
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
DenseMatrix<F> to_dense(const SparseMatrix<F>& m) {
  DenseMatrix<F> d(m.rows(), std::vector<F>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) d[i][j] = v;
  return d;
}

/// Row-reduces a dense matrix; `one` is the multiplicative identity of the field.
template <class F>
Echelon<F> row_reduce(DenseMatrix<F> a, std::size_t cols, const F& one) {
  Echelon<F> out;
  out.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && scalar_is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    F inv = one / a[r][c];
    for (std::size_t k = c; k < cols; ++k) {
      if (!scalar_is_zero(a[r][k])) a[r][k] = a[r][k] * inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || scalar_is_zero(a[i][c])) continue;
      F f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!scalar_is_zero(a[r][k])) a[i][k] -= f * a[r][k];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

template <class F>
std::size_t rank_of(const DenseMatrix<F>& a, std::size_t cols, const F& one) {
  return row_reduce(a, cols, one).rank();
}

/// Basis of the right kernel {x : A x = 0}, one vector per non-pivot column.
template <class F>
std::vector<DenseVector<F>> kernel_basis(const DenseMatrix<F>& a, std::size_t cols, const F& one) {
  Echelon<F> e = row_reduce(a, cols, one);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<DenseVector<F>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    DenseVector<F> x(cols);
    x[f] = one;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      if (!scalar_is_zero(e.rows[r][f])) x[e.pivots[r]] = -e.rows[r][f];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Solves A x = b with every non-pivot unknown set to zero; empty when inconsistent.
template <class F>
std::optional<DenseVector<F>> solve_pivot_complement(const DenseMatrix<F>& a, const DenseVector<F>& b, const F& one) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  DenseMatrix<F> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon<F> e = row_reduce(std::move(aug), cols + 1, one);
  DenseVector<F> x(cols);
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

/// Incrementally grown span kept in reduced echelon form.
template <class F>
class SpanBuilder {
 public:
  explicit SpanBuilder(F one) : one_(std::move(one)) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the span; returns the residual.
  DenseVector<F> residual(DenseVector<F> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (scalar_is_zero(v[p])) continue;
      F f = v[p];
      const auto& row = rows_[r];
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!scalar_is_zero(row[k])) v[k] -= f * row[k];
      }
    }
    return v;
  }

  bool contains(const DenseVector<F>& v) const {
    for (const auto& x : residual(v))
      if (!scalar_is_zero(x)) return false;
    return true;
  }

  /// Adds v if it enlarges the span; returns whether it did.
  bool add(const DenseVector<F>& v) {
    DenseVector<F> w = residual(v);
    std::size_t p = 0;
    while (p < w.size() && scalar_is_zero(w[p])) ++p;
    if (p == w.size()) return false;
    F inv = one_ / w[p];
    for (auto& x : w) {
      if (!scalar_is_zero(x)) x = x * inv;
    }
    for (auto& row : rows_) {
      if (scalar_is_zero(row[p])) continue;
      F f = row[p];
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (!scalar_is_zero(w[k])) row[k] -= f * w[k];
      }
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

 private:
  F one_;
  DenseMatrix<F> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tlq
