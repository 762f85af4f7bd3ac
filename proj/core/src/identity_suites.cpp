#include "tlq/identity_suites.hpp"

#include <stdexcept>
#include <string>

#include "tlq/qnum.hpp"
#include "tlq/spinrep.hpp"

namespace tlq {

namespace {

using LOp = Operator<LaurentPoly>;

struct Tally {
  long long count = 0;
  std::string first_failure;
  void expect(bool ok, const std::string& where) {
    ++count;
    if (!ok && first_failure.empty()) first_failure = where;
  }
  void report(CheckList& out, const std::string& name) const {
    out.add(name, first_failure.empty(),
            first_failure.empty() ? std::to_string(count) + " cases" : "fails at " + first_failure);
  }
};

std::string args(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

LOp zero_op(int n, int dom_m2, int cod_m2) {
  return LOp{n, dom_m2, cod_m2, SparseMatrix<LaurentPoly>(WeightSpace(n, cod_m2).dim(), WeightSpace(n, dom_m2).dim())};
}

void qint_products(CheckList& out) {
  Tally t;
  for (int b = 1; b <= 10; ++b)
    for (int c = 1; c <= 10; ++c) {
      LaurentPoly sum;
      for (int s = 0; s < b; ++s) sum += q_int(b + c - 1 - 2 * s);
      t.expect(q_int(b) * q_int(c) == sum, args({b, c}));
    }
  t.report(out, "qint_products");
}

void alternating_sums(CheckList& out, int max_n) {
  Tally a, b;
  for (int j2 = 0; j2 <= max_n; ++j2)
    for (int k = 1; k <= max_n; ++k)
      for (int l = 0; l < k; ++l) a.expect(identity_A(l, j2, k).holds(), args({l, j2, k}));
  for (int m2 = 0; m2 <= max_n; ++m2)
    for (int i = 1; i <= max_n; ++i)
      for (int l = 0; l < i; ++l) b.expect(identity_B(l, m2, i).holds(), args({l, m2, i}));
  a.report(out, "alternating_sum_first");
  b.report(out, "alternating_sum_second");
}

void q_lucas_suite(CheckList& out) {
  Tally t;
  for (int p = 2; p <= 5; ++p)
    for (int k = 0; k <= 3; ++k)
      for (int kp = 0; kp <= 3; ++kp)
        for (int a = 0; a < p; ++a)
          for (int ap = 0; ap < p; ++ap) t.expect(q_lucas(k, kp, a, ap, RootSpec(p)).consistent, args({p, k, kp, a, ap}));
  t.report(out, "q_lucas");
}

void ladder_weight_shift(CheckList& out, int max_n) {
  // (S^+)^{(k)} [2S^z + c] = [2S^z + c - 2k] (S^+)^{(k)}, and the mirror relation for S^-
  Tally t;
  for (int n = 1; n <= max_n; ++n)
    for (int m2 = -n; m2 <= n; m2 += 2)
      for (int k = 1; m2 + 2 * k <= n; ++k)
        for (int c = -2; c <= 2; ++c) {
          const LOp up = divided_power(+1, k, n, m2);
          t.expect(up * weight_q_int(n, m2, c) == weight_q_int(n, m2 + 2 * k, c - 2 * k) * up, args({n, m2, k, c}));
          const LOp down = divided_power(-1, k, n, m2 + 2 * k);
          t.expect(down * weight_q_int(n, m2 + 2 * k, c) == weight_q_int(n, m2, c + 2 * k) * down, args({n, m2, k, c}));
        }
  t.report(out, "ladder_weight_shift");
}

void structure_constants(CheckList& out, int max_n) {
  // S_k S_l = sum_i qbin(l+i, k) qbin(l+i, l) qbin(2m+k+l, k-i) S_{l+i}
  Tally t;
  for (int n = 1; n <= max_n; ++n)
    for (int m2 = -n; m2 <= n; m2 += 2) {
      const int top = (n - m2) / 2;
      for (int k = 0; k <= top; ++k)
        for (int l = k; l <= top; ++l) {
          LOp rhs = zero_op(n, m2, m2);
          for (int i = 0; i <= k; ++i)
            rhs += s_r_shared(n, l + i, m2)->scaled(q_binomial(l + i, k) * q_binomial(l + i, l) *
                                                    q_binomial_general(m2 + k + l, k - i));
          t.expect(*s_r_shared(n, k, m2) * *s_r_shared(n, l, m2) == rhs, args({n, m2, k, l}));
        }
    }
  t.report(out, "structure_constants");
}

void commutant_commutes(CheckList& out, int max_n) {
  Tally t;
  for (int n = 1; n <= max_n; ++n)
    for (int m2 = -n; m2 <= n; m2 += 2) {
      const int top = (n - m2) / 2;
      for (int a = 0; a <= top; ++a) {
        const auto sa = s_r_shared(n, a, m2);
        for (int b = a + 1; b <= top; ++b) {
          const auto sb = s_r_shared(n, b, m2);
          t.expect(*sa * *sb == *sb * *sa, args({n, m2, a, b}));
        }
        for (int i = 1; i < n; ++i) {
          const LOp e = tl_generator(n, i, m2);
          t.expect(*sa * e == e * *sa, args({n, m2, a, i}));
        }
      }
    }
  t.report(out, "commutant_commutes");
}

void diagonal_on_descents(CheckList& out, int max_n) {
  // S_r (S^-)^{(j-m)}|j,j> = qbin(j+m+r, r) qbin(j-m, r) (S^-)^{(j-m)}|j,j>
  Tally t;
  for (int n = 1; n <= max_n; ++n)
    for (int j2 = n % 2; j2 <= n; j2 += 2) {
      const auto hw = highest_weight_basis(n, j2);
      for (int m2 = j2; m2 >= -j2; m2 -= 2) {
        const int jm = (j2 - m2) / 2;
        const int jpm = (j2 + m2) / 2;
        const LOp down = divided_power(-1, jm, n, j2);
        std::vector<std::vector<LaurentPoly>> desc;
        for (const auto& v : hw) desc.push_back(down.mat.apply(v));
        for (int r = 0; r <= (n - m2) / 2; ++r) {
          const LaurentPoly ev = q_binomial(jpm + r, r) * q_binomial(jm, r);
          if (r == 1) t.expect(ev == q_int(jpm + 1) * q_int(jm), args({n, j2, m2}));
          const auto s = s_r_shared(n, r, m2);
          for (const auto& d : desc) {
            const auto y = s->mat.apply(d);
            bool ok = true;
            for (std::size_t k = 0; k < d.size() && ok; ++k) ok = y[k] == d[k] * ev;
            t.expect(ok, args({n, j2, m2, r}));
          }
        }
      }
    }
  t.report(out, "diagonal_on_descents");
}

}  // namespace

CheckList identity_suites(int max_n) {
  if (max_n < 1) throw std::invalid_argument("identity_suites: max_n must be positive");
  CheckList out;
  qint_products(out);
  alternating_sums(out, max_n);
  q_lucas_suite(out);
  ladder_weight_shift(out, max_n);
  structure_constants(out, max_n);
  commutant_commutes(out, max_n);
  diagonal_on_descents(out, max_n);
  return out;
}

}  // namespace tlq
