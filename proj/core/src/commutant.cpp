#include <map>
#include <stdexcept>
#include <unordered_map>

#include "tlq/spinrep.hpp"

namespace tlq {

namespace {

template <class T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

// row -= f * piv, both sorted by column
template <class T>
void subtract_scaled(SparseRow<T>& row, const T& f, const SparseRow<T>& piv, SparseRow<T>& scratch) {
  scratch.clear();
  scratch.reserve(row.size() + piv.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < piv.size()) {
    if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
      scratch.push_back(std::move(row[a++]));
    } else if (a == row.size() || piv[b].first < row[a].first) {
      scratch.emplace_back(piv[b].first, -(f * piv[b].second));
      ++b;
    } else {
      T x = std::move(row[a].second);
      x -= f * piv[b].second;
      if (!x.is_zero()) scratch.emplace_back(row[a].first, std::move(x));
      ++a;
      ++b;
    }
  }
  row.swap(scratch);
}

/// Row echelon form grown one equation at a time; pivot rows have leading coefficient one.
template <class T>
class SparseEchelon {
 public:
  bool insert(SparseRow<T> row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      const T f = row.front().second;
      subtract_scaled(row, f, it->second, scratch_);
    }
    if (row.empty()) return false;
    const T inv = row.front().second.inverse();
    for (auto& [c, x] : row) x *= inv;
    const auto lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::unordered_map<std::uint32_t, SparseRow<T>> pivots_;
  SparseRow<T> scratch_;
};

template <class Ring>
int commutant_dimension_at(int n, int m2, const Ring& ring) {
  using T = typename Ring::value_type;
  WeightSpace w(n, m2);
  const std::size_t d = w.dim();
  const auto var = [d](std::size_t r, std::size_t c) { return static_cast<std::uint32_t>(r * d + c); };
  SparseEchelon<T> ech;
  std::map<std::uint32_t, T> acc;
  for (int i = 1; i < n; ++i) {
    const auto e = tl_generator(ring, n, i, m2).mat;
    const auto et = e.transposed();
    // (X e - e X)[r][c] = sum_k X[r][k] e[k][c] - sum_k e[r][k] X[k][c]
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        acc.clear();
        for (const auto& [k, x] : et.row(c)) acc[var(r, k)] += x;
        for (const auto& [k, x] : e.row(r)) acc[var(k, c)] -= x;
        SparseRow<T> row;
        for (auto& [v, x] : acc)
          if (!x.is_zero()) row.emplace_back(v, x);
        if (!row.empty()) ech.insert(std::move(row));
      }
    }
  }
  return static_cast<int>(d * d - ech.rank());
}

}  // namespace

std::vector<int> commutant_dimension(int n, int m2, const std::vector<Rational>& probes) {
  if (probes.empty()) throw std::invalid_argument("commutant_dimension: at least one probe point is required");
  std::vector<int> out;
  out.reserve(probes.size());
  for (const auto& q : probes) {
    if (q.is_zero()) throw std::invalid_argument("commutant_dimension: probe q = 0");
    out.push_back(commutant_dimension_at(n, m2, ProbeScalars(q)));
  }
  return out;
}

int commutant_dimension_at_root(int n, int m2, const RootSpec& root) {
  return commutant_dimension_at(n, m2, CycloScalars(root));
}

}  // namespace tlq
