#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "tlq/cyclotomic.hpp"
#include "tlq/laurent_poly.hpp"
#include "tlq/linalg.hpp"
#include "tlq/ratfunc.hpp"
#include "tlq/sparse_matrix.hpp"
#include "tlq/spin_basis.hpp"

namespace tlq {

/// Linear map between weight spaces of the same chain; columns index the domain.
template <class T>
struct Operator {
  int n = 0;
  int dom_m2 = 0;
  int cod_m2 = 0;
  SparseMatrix<T> mat;

  std::size_t rows() const { return mat.rows(); }
  std::size_t cols() const { return mat.cols(); }

  friend bool operator==(const Operator& a, const Operator& b) {
    return a.n == b.n && a.dom_m2 == b.dom_m2 && a.cod_m2 == b.cod_m2 && a.mat == b.mat;
  }

  /// Composition (*this) after b.
  Operator operator*(const Operator& b) const {
    if (n != b.n || dom_m2 != b.cod_m2) throw std::invalid_argument("Operator: incompatible weight spaces in composition");
    return Operator{n, b.dom_m2, cod_m2, mat * b.mat};
  }
  Operator& operator+=(const Operator& b) {
    check_same(b);
    mat += b.mat;
    return *this;
  }
  Operator& operator-=(const Operator& b) {
    check_same(b);
    mat -= b.mat;
    return *this;
  }
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }

  template <class S>
  Operator scaled(const S& c) const {
    return Operator{n, dom_m2, cod_m2, mat.scaled(c)};
  }

  template <class U, class Fn>
  Operator<U> map(Fn&& f) const {
    return Operator<U>{n, dom_m2, cod_m2, mat.template map<U>(std::forward<Fn>(f))};
  }

 private:
  void check_same(const Operator& b) const {
    if (n != b.n || dom_m2 != b.dom_m2 || cod_m2 != b.cod_m2)
      throw std::invalid_argument("Operator: incompatible weight spaces in sum");
  }
};

/// Monomials c * v^e in the Laurent ring.
struct LaurentScalars {
  using value_type = LaurentPoly;
  LaurentPoly mono(int e, int c) const { return LaurentPoly::monomial(e, Rational(c)); }
  LaurentPoly one() const { return LaurentPoly(1); }
};

/// Monomials evaluated at the root of unity v_c.
struct CycloScalars {
  using value_type = CycloNumber;
  explicit CycloScalars(const RootSpec& r) : root(r), field(CyclotomicField::get(r.v_order())) {}
  RootSpec root;
  std::shared_ptr<const CyclotomicField> field;
  CycloNumber mono(int e, int c) const {
    return CycloNumber::root_power(field, e * root.v_exponent()) * Rational(c);
  }
  CycloNumber one() const { return CycloNumber(field, Rational(1)); }
};

/// Monomials evaluated at a complex value of v.
struct ComplexScalars {
  using value_type = std::complex<double>;
  explicit ComplexScalars(std::complex<double> v_) : v(v_) {}
  std::complex<double> v;
  std::complex<double> mono(int e, int c) const { return static_cast<double>(c) * std::pow(v, e); }
  std::complex<double> one() const { return {1.0, 0.0}; }
};

/// Monomials evaluated at a rational q; only even powers of v are representable.
struct ProbeScalars {
  using value_type = Rational;
  explicit ProbeScalars(Rational q_) : q(std::move(q_)) {}
  Rational q;
  Rational mono(int e, int c) const;
  Rational one() const { return Rational(1); }
};

/// Ring adaptor multiplying every monomial by v^shift.
template <class Ring>
struct ShiftedScalars {
  using value_type = typename Ring::value_type;
  const Ring& base;
  int shift = 0;
  value_type mono(int e, int c) const { return base.mono(e + shift, c); }
  value_type one() const { return base.one(); }
};

// ---- generators ----

template <class Ring>
Operator<typename Ring::value_type> tl_generator(const Ring& ring, int n, int i, int m2) {
  if (i < 1 || i >= n) throw std::invalid_argument("tl_generator: site index must satisfy 1 <= i < n");
  WeightSpace w(n, m2);
  using V = typename Ring::value_type;
  Operator<V> op{n, m2, m2, SparseMatrix<V>(w.dim(), w.dim())};
  const V qinv = ring.mono(-2, 1);
  const V q = ring.mono(2, 1);
  const V minus_one = ring.mono(0, -1);
  for (std::size_t c = 0; c < w.dim(); ++c) {
    const std::uint32_t s = w.state(c);
    const int a = w.spin(s, i);
    const int b = w.spin(s, i + 1);
    if (a == b) continue;
    const std::uint32_t t = s ^ w.site_bit(i) ^ w.site_bit(i + 1);
    const auto r = static_cast<std::size_t>(w.index_of(t));
    // E|+-> = q^{-1}|+-> - |-+>,  E|-+> = -|+-> + q|-+>
    op.mat.add_to(c, c, a > 0 ? qinv : q);
    op.mat.add_to(r, c, minus_one);
  }
  return op;
}

template <class Ring>
Operator<typename Ring::value_type> spin_ladder(const Ring& ring, int n, int m2, int direction) {
  using V = typename Ring::value_type;
  const int target = m2 + 2 * direction;
  WeightSpace dom(n, m2);
  if (!WeightSpace::valid(n, target)) {
    return Operator<V>{n, m2, target, SparseMatrix<V>(0, dom.dim())};
  }
  WeightSpace cod(n, target);
  std::vector<typename SparseMatrix<V>::Row> rows(cod.dim());
  SparseMatrix<V> mat(cod.dim(), dom.dim());
  const int flip_from = direction > 0 ? -1 : 1;
  for (std::size_t c = 0; c < dom.dim(); ++c) {
    const std::uint32_t s = dom.state(c);
    int left = 0;
    int right = 0;
    for (int k = 1; k <= n; ++k) right += dom.spin(s, k);
    for (int i = 1; i <= n; ++i) {
      const int si = dom.spin(s, i);
      right -= si;
      if (si == flip_from) {
        const std::uint32_t t = s ^ dom.site_bit(i);
        // q^{sigma^z/2} to the left of site i, q^{-sigma^z/2} to the right
        rows[static_cast<std::size_t>(cod.index_of(t))].emplace_back(static_cast<std::uint32_t>(c), ring.mono(left - right, 1));
      }
      left += si;
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::sort(rows[r].begin(), rows[r].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    mat.set_row(r, std::move(rows[r]));
  }
  return Operator<V>{n, m2, target, std::move(mat)};
}

/// S^+ : W_m -> W_{m+1}.
template <class Ring>
Operator<typename Ring::value_type> uq_splus(const Ring& ring, int n, int m2) {
  return spin_ladder(ring, n, m2, +1);
}

/// S^- : W_m -> W_{m-1}.
template <class Ring>
Operator<typename Ring::value_type> uq_sminus(const Ring& ring, int n, int m2) {
  return spin_ladder(ring, n, m2, -1);
}

template <class Ring>
Operator<typename Ring::value_type> identity_operator(const Ring& ring, int n, int m2) {
  WeightSpace w(n, m2);
  using V = typename Ring::value_type;
  return Operator<V>{n, m2, m2, SparseMatrix<V>::identity(w.dim(), ring.one())};
}

template <class Ring>
Operator<typename Ring::value_type> hamiltonian(const Ring& ring, int n, int m2) {
  WeightSpace w(n, m2);
  using V = typename Ring::value_type;
  Operator<V> h{n, m2, m2, SparseMatrix<V>(w.dim(), w.dim())};
  for (int i = 1; i < n; ++i) h += tl_generator(ring, n, i, m2);
  return h;
}

Operator<LaurentPoly> tl_generator(int n, int i, int m2);
/// Hecke generator g_i = e_i - q^{-1}.
Operator<LaurentPoly> hecke_generator(int n, int i, int m2);
Operator<LaurentPoly> uq_splus(int n, int m2);
Operator<LaurentPoly> uq_sminus(int n, int m2);
Operator<LaurentPoly> hamiltonian(int n, int m2);
Operator<LaurentPoly> identity_operator(int n, int m2);

/// (S^{sign})^r / [r]! starting from W_m; sign is +1 or -1.
Operator<LaurentPoly> divided_power(int sign, int r, int n, int m2);

struct CommutantGenerator {
  Operator<LaurentPoly> op;
  bool in_range = true;
};

/// S_r = (S^-)^{(r)} (S^+)^{(r)} on W_m; zero with in_range = false outside 0 <= r <= n/2 - m.
CommutantGenerator s_r(int n, int r, int m2);
/// Shared, memoised S_r matrix (zero outside the range).
std::shared_ptr<const Operator<LaurentPoly>> s_r_shared(int n, int r, int m2);

/// Quantum Casimir S^- S^+ + [S^z + 1/2]^2 - [1/2]^2 on W_m.
Operator<RatFunc> casimir(int n, int m2);
/// (q - q^{-1})^2 S^2 + [2], which has polynomial entries.
Operator<LaurentPoly> casimir_central(int n, int m2);

/// dim of {X : X e_i = e_i X for all i} on W_m, by exact elimination at each rational probe q.
std::vector<int> commutant_dimension(int n, int m2, const std::vector<Rational>& probes);
/// Same dimension, computed exactly over the cyclotomic field at q_c.
int commutant_dimension_at_root(int n, int m2, const RootSpec& root);

/// Kernel of S^+ on W_j as Laurent-polynomial vectors (the highest-weight vectors of weight j).
std::vector<std::vector<LaurentPoly>> highest_weight_basis(int n, int j2);

struct ReversalReport {
  bool ok = true;
  std::string detail;
};

/// Checks R e_i(q) R = e_i(q^{-1}) between W_m and W_{-m}, for every i.
ReversalReport spin_reversal_check(int n, int m2);

/// Evaluates entries at v = v_c.
Operator<CycloNumber> to_cyclo(const Operator<LaurentPoly>& op, const RootSpec& root);
/// Evaluates entries at a rational q; odd powers of v are removed by a global factor v^{+-1}.
Operator<Rational> to_probe(const Operator<LaurentPoly>& op, const Rational& q);
Operator<std::complex<double>> to_complex(const Operator<LaurentPoly>& op, std::complex<double> v);
Operator<RatFunc> to_ratfunc(const Operator<LaurentPoly>& op);

/// Evaluates a Laurent polynomial with all exponents even at a rational q.
Rational eval_q(const LaurentPoly& f, const Rational& q);
/// Same, for a rational function whose numerator and denominator have even exponents after cancelling a monomial.
Rational eval_q(const RatFunc& f, const Rational& q);

/// v^{-+(n-1)} (S^{sign})^r / [r]! at a rational q; the prefactor makes every entry a power of q.
Operator<Rational> divided_power_probe(int sign, int r, int n, int m2, const Rational& q);
/// S_r evaluated at a rational q.
Operator<Rational> s_r_probe(int n, int r, int m2, const Rational& q);
/// Kernel of S^+ on W_j at a rational q.
std::vector<std::vector<Rational>> highest_weight_basis_probe(int n, int j2, const Rational& q);

/// Diagonal operator [2S^z + k] on W_m.
Operator<LaurentPoly> weight_q_int(int n, int m2, int k);

}  // namespace tlq
