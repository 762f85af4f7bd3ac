#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tlq {

inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }
inline void add_mul(std::complex<double>& acc, const std::complex<double>& a, const std::complex<double>& b) {
  acc += a * b;
}

template <class T>
inline bool scalar_is_zero(const T& x) {
  return is_zero(x);
}

template <class T>
inline void scalar_add_mul(T& acc, const T& a, const T& b) {
  add_mul(acc, a, b);
}

/// Row-compressed sparse matrix; no stored entry is zero.
template <class T>
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, T>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n, const T& one) {
    SparseMatrix m(n, n);
    if (scalar_is_zero(one)) return m;
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), one);
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const {
    std::size_t s = 0;
    for (const auto& r : data_) s += r.size();
    return s;
  }
  const Row& row(std::size_t i) const { return data_[i]; }
  const std::vector<Row>& data() const { return data_; }

  T at(std::size_t i, std::size_t j) const {
    const Row& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) return it->second;
    return T{};
  }

  /// Adds v to entry (i, j), dropping it if the sum is zero.
  void add_to(std::size_t i, std::size_t j, const T& v) {
    if (scalar_is_zero(v)) return;
    Row& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      it->second += v;
      if (scalar_is_zero(it->second)) r.erase(it);
    } else {
      r.insert(it, Entry(static_cast<std::uint32_t>(j), v));
    }
  }

  void set(std::size_t i, std::size_t j, const T& v) {
    Row& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    const bool present = it != r.end() && it->first == j;
    if (scalar_is_zero(v)) {
      if (present) r.erase(it);
    } else if (present) {
      it->second = v;
    } else {
      r.insert(it, Entry(static_cast<std::uint32_t>(j), v));
    }
  }

  /// Replaces row i; entries must be sorted by column and nonzero.
  void set_row(std::size_t i, Row r) { data_.at(i) = std::move(r); }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  SparseMatrix operator*(const SparseMatrix& b) const {
    if (cols_ != b.rows()) throw std::invalid_argument("SparseMatrix: dimension mismatch in product");
    SparseMatrix out(rows(), b.cols());
    std::vector<T> acc(b.cols());
    std::vector<char> used(b.cols(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < rows(); ++i) {
      touched.clear();
      for (const auto& [k, a] : data_[i]) {
        for (const auto& [j, bv] : b.data_[k]) {
          if (!used[j]) {
            used[j] = 1;
            touched.push_back(j);
          }
          scalar_add_mul(acc[j], a, bv);
        }
      }
      std::sort(touched.begin(), touched.end());
      Row r;
      r.reserve(touched.size());
      for (auto j : touched) {
        if (!scalar_is_zero(acc[j])) r.emplace_back(j, std::move(acc[j]));
        acc[j] = T{};
        used[j] = 0;
      }
      out.data_[i] = std::move(r);
    }
    return out;
  }

  SparseMatrix& operator+=(const SparseMatrix& b) { return combine(b, false); }
  SparseMatrix& operator-=(const SparseMatrix& b) { return combine(b, true); }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

  template <class S>
  SparseMatrix scaled(const S& c) const {
    SparseMatrix out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [j, v] : data_[i]) {
        T x = v * c;
        if (!scalar_is_zero(x)) out.data_[i].emplace_back(j, std::move(x));
      }
    }
    return out;
  }

  SparseMatrix transposed() const {
    SparseMatrix out(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : data_[i]) out.data_[j].emplace_back(static_cast<std::uint32_t>(i), v);
    return out;
  }

  /// Applies f entrywise, dropping entries that become zero.
  template <class U, class F>
  SparseMatrix<U> map(F&& f) const {
    SparseMatrix<U> out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i) {
      typename SparseMatrix<U>::Row r;
      r.reserve(data_[i].size());
      for (const auto& [j, v] : data_[i]) {
        U x = f(v);
        if (!scalar_is_zero(x)) r.emplace_back(j, std::move(x));
      }
      out.set_row(i, std::move(r));
    }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("SparseMatrix: vector length mismatch");
    std::vector<T> y(rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : data_[i]) scalar_add_mul(y[i], v, x[j]);
    return y;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < std::min(rows(), cols_); ++i) t += at(i, i);
    return t;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;

  SparseMatrix& combine(const SparseMatrix& b, bool subtract) {
    if (rows() != b.rows() || cols_ != b.cols_) throw std::invalid_argument("SparseMatrix: dimension mismatch in sum");
    for (std::size_t i = 0; i < rows(); ++i) {
      const Row& x = data_[i];
      const Row& y = b.data_[i];
      if (y.empty()) continue;
      Row r;
      r.reserve(x.size() + y.size());
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
          r.push_back(x[p++]);
        } else if (p == x.size() || y[q].first < x[p].first) {
          r.emplace_back(y[q].first, subtract ? T(-y[q].second) : y[q].second);
          ++q;
        } else {
          T s = x[p].second;
          if (subtract) s -= y[q].second;
          else s += y[q].second;
          if (!scalar_is_zero(s)) r.emplace_back(x[p].first, std::move(s));
          ++p;
          ++q;
        }
      }
      data_[i] = std::move(r);
    }
    return *this;
  }
};

}  // namespace tlq
