#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tlq/idempotent.hpp"
#include "tlq/spin_basis.hpp"

using namespace tlq;

namespace {

RatFunc rf(const LaurentPoly& p) { return RatFunc(p); }

/// Entry-wise value of a Laurent polynomial in v whose exponents are all even, at q = v^2.
mpq_class eval_even(const oracle::Poly& p, const mpq_class& q) {
  mpq_class s = 0;
  for (const auto& [e, c] : p) {
    EXPECT_EQ(e % 2, 0);
    mpq_class t = c;
    const int k = e / 2;
    for (int r = 0; r < (k >= 0 ? k : -k); ++r) {
      if (k >= 0) t *= q;
      else t /= q;
    }
    s += t;
  }
  return s;
}

using QMat = std::vector<std::vector<mpq_class>>;

QMat qmul(const QMat& a, const QMat& b) {
  QMat r(a.size(), std::vector<mpq_class>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

mpq_class qpow(const mpq_class& q, int k) {
  mpq_class t = 1;
  for (int r = 0; r < (k >= 0 ? k : -k); ++r) t = k >= 0 ? mpq_class(t * q) : mpq_class(t / q);
  return t;
}

/**
 * Spectral projector onto the eigenvalue q^{2j+1} + q^{-2j-1} of
 * (q - q^{-1})^2 S^- S^+ + q^{2m+1} + q^{-2m-1} on W_m, built from dense
 * Kronecker-product ladder operators.
 */
QMat casimir_projector(int n, int j2, int m2, const mpq_class& q) {
  const auto idx = oracle::weight_indices(n, m2);
  const auto lower = oracle::ladder_full(n, -1);
  const auto raise = oracle::ladder_full(n, +1);
  const auto ss = oracle::restrict(oracle::matmul(lower, raise), idx, idx);
  const std::size_t d = idx.size();
  const mpq_class pre = (q - 1 / q) * (q - 1 / q);
  QMat f(d, std::vector<mpq_class>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) f[r][c] = pre * eval_even(ss[r][c], q);
  for (std::size_t r = 0; r < d; ++r) f[r][r] += qpow(q, m2 + 1) + qpow(q, -m2 - 1);
  auto lambda = [&](int x2) { return mpq_class(qpow(q, x2 + 1) + qpow(q, -x2 - 1)); };
  QMat p(d, std::vector<mpq_class>(d));
  for (std::size_t r = 0; r < d; ++r) p[r][r] = 1;
  for (int k2 = m2; k2 <= n; k2 += 2) {
    if (k2 == j2) continue;
    QMat g = f;
    for (std::size_t r = 0; r < d; ++r) g[r][r] -= lambda(k2);
    const mpq_class scale = 1 / (lambda(j2) - lambda(k2));
    for (auto& row : g)
      for (auto& x : row) x *= scale;
    p = qmul(p, g);
  }
  return p;
}

}  // namespace

TEST(Coefficients, SmallValues) {
  EXPECT_EQ(coeff_a(1, 0, 0), -RatFunc(1) / rf(q_int(2)));
  EXPECT_EQ(coeff_a(1, 2, 0), RatFunc(1) / rf(q_int(2)));
  for (int j2 = 0; j2 <= 12; ++j2) EXPECT_EQ(coeff_a(0, j2, j2), RatFunc(1)) << j2;
  EXPECT_TRUE(coeff_a(0, 4, 0).is_zero());
  EXPECT_TRUE(coeff_a(2, 9, 1).is_zero());
  EXPECT_THROW(coeff_a(0, 1, 0), std::invalid_argument);
  EXPECT_THROW(coeff_a(0, 0, 2), std::invalid_argument);
}

TEST(Coefficients, MatchClearedOracleForm) {
  // a * qbin(i+j+m+1, i+1) * [i+1] = (-1)^{i+j-m} qbin(i, j-m) [2j+1]
  for (int m2 = 0; m2 <= 5; ++m2)
    for (int j2 = m2; j2 <= 11; j2 += 2)
      for (int i = 0; i <= 7; ++i) {
        const int jm = (j2 - m2) / 2;
        const int top = i + (j2 + m2) / 2 + 1;
        const RatFunc a = coeff_a(i, j2, m2);
        ASSERT_TRUE((a * rf(q_binomial(top, i + 1)) * rf(q_int(i + 1))).is_polynomial());
        const LaurentPoly lhs = (a * rf(q_binomial(top, i + 1)) * rf(q_int(i + 1))).as_polynomial();
        oracle::Poly rhs = oracle::mul(oracle::q_binomial(i, jm), oracle::q_int(j2 + 1));
        if ((i + jm) % 2) rhs = oracle::add({}, rhs, -1);
        EXPECT_TRUE(oracle::same(lhs, rhs)) << i << " " << j2 << " " << m2;
      }
}

TEST(Coefficients, SumOverWeightsIsKronecker) {
  // partition of unity read off the S_0 .. S_top coefficients
  for (int m2 = 0; m2 <= 4; ++m2)
    for (int i = 0; i <= 6; ++i) {
      RatFunc s;
      for (int j2 = m2; j2 <= m2 + 2 * i; j2 += 2) s += coeff_a(i, j2, m2);
      EXPECT_EQ(s, RatFunc(i == 0 ? 1 : 0)) << i << " " << m2;
    }
}

TEST(Coefficients, DiagonalActionOnTowers) {
  // sum_i a_{i,j,m} qbin(j'+m+i, i) qbin(j'-m, i) = delta_{j j'}
  for (int m2 = 0; m2 <= 3; ++m2)
    for (int j2 = m2; j2 <= m2 + 8; j2 += 2)
      for (int k2 = m2; k2 <= m2 + 8; k2 += 2) {
        RatFunc s;
        for (int i = 0; i <= (k2 - m2) / 2; ++i)
          s += coeff_a(i, j2, m2) * rf(q_binomial((k2 + m2) / 2 + i, i) * q_binomial((k2 - m2) / 2, i));
        EXPECT_EQ(s, RatFunc(j2 == k2 ? 1 : 0)) << j2 << " " << k2 << " " << m2;
      }
}

TEST(Idempotents, TwoSitesExplicit) {
  const auto z0 = idempotent_z(2, 0, 0);
  const auto z1 = idempotent_z(2, 2, 0);
  const auto s1 = to_ratfunc(s_r(2, 1, 0).op);
  const auto id = to_ratfunc(identity_operator(2, 0));
  EXPECT_EQ(z0, id - s1.scaled(RatFunc(1) / rf(q_int(2))));
  EXPECT_EQ(z1, s1.scaled(RatFunc(1) / rf(q_int(2))));
  EXPECT_EQ(z0 * z0, z0);
  EXPECT_EQ(z1 * z1, z1);
  EXPECT_TRUE((z0 * z1).mat.is_zero());
  EXPECT_EQ(z0 + z1, id);
}

TEST(Idempotents, TopWeightIsIdentity) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(idempotent_z(n, n, n), to_ratfunc(identity_operator(n, n))) << n;
}

TEST(Idempotents, MatchCasimirSpectralProjectors) {
  const mpq_class q(3, 2);
  for (int n = 1; n <= 6; ++n)
    for (int m2 = n % 2; m2 <= n; m2 += 2)
      for (int j2 = m2; j2 <= n; j2 += 2) {
        const auto z = idempotent_z_probe(n, j2, m2, Rational(3, 2));
        const auto p = casimir_projector(n, j2, m2, q);
        ASSERT_EQ(z.rows(), p.size());
        for (std::size_t r = 0; r < p.size(); ++r)
          for (std::size_t c = 0; c < p.size(); ++c)
            ASSERT_EQ(z.mat.at(r, c).to_mpq(), p[r][c]) << n << " " << j2 << " " << m2 << " " << r << " " << c;
      }
}

TEST(Idempotents, ClearedFamilyAgreesWithRationalFunctions) {
  for (int n = 2; n <= 5; ++n)
    for (int m2 = n % 2; m2 <= n; m2 += 2) {
      const auto fam = cleared_family(n, m2);
      for (std::size_t k = 0; k < fam.j2s.size(); ++k) {
        const auto z = idempotent_z(n, fam.j2s[k], m2);
        const auto zc = to_ratfunc(fam.num[k]).scaled(RatFunc(1) / RatFunc(fam.den));
        EXPECT_EQ(z, zc) << n << " " << fam.j2s[k] << " " << m2;
      }
    }
}

TEST(VerifyFamily, SymbolicSmallChains) {
  for (int n = 1; n <= 6; ++n)
    for (int m2 = n % 2; m2 <= n; m2 += 2) {
      const auto rep = verify_family(n, m2);
      EXPECT_TRUE(rep.ok()) << n << " " << m2;
      EXPECT_EQ(rep.idempotents.size(), static_cast<std::size_t>((n - m2) / 2 + 1));
      EXPECT_EQ(rep.commutant_dim, (n - m2) / 2 + 1);
      for (const auto& r : rep.idempotents) {
        EXPECT_EQ(r.trace, std::to_string(gamma_multiplicity(n, r.j2)));
        for (const auto& c : r.checks.items) EXPECT_TRUE(c.ok) << n << " " << m2 << " " << r.j2 << " " << c.name << " " << c.detail;
      }
    }
}

TEST(VerifyFamily, FiveSitesHalfWeight) {
  const auto rep = verify_family(5, 1);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.idempotents.size(), 3u);
}

TEST(VerifyFamily, ProbeModeEightSites) {
  const auto rep = verify_family(8, 0, VerifyMode::Probe);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.idempotents.size(), 5u);
  EXPECT_EQ(rep.idempotents[0].trace, "14");
}

TEST(VerifyFamily, RefusesAboveCaps) {
  EXPECT_THROW(verify_family(9, 1), std::invalid_argument);
  EXPECT_THROW(verify_family(13, 1, VerifyMode::Probe), std::invalid_argument);
  EXPECT_THROW(verify_family(4, 1), std::invalid_argument);
}

TEST(Recursion, TopCoefficientFromLowerOnes) {
  EXPECT_TRUE(recursion_check(4, 0, 0).ok);
  EXPECT_TRUE(recursion_check(6, 2, 0).ok);
  for (int n = 2; n <= 8; ++n)
    for (int m2 = n % 2; m2 <= n - 2; m2 += 2)
      for (int j2 = m2; j2 <= n - 2; j2 += 2) {
        const auto r = recursion_check(n, j2, m2);
        EXPECT_TRUE(r.ok) << n << " " << j2 << " " << m2 << " " << r.from_recursion << " vs " << r.closed_form;
      }
  EXPECT_THROW(recursion_check(4, 4, 0), std::invalid_argument);
}

TEST(CasimirRelation, Scalars) {
  EXPECT_EQ(casimir_relation_scalar(2), rf(q_int(6)) / rf(q_int(3)));
  EXPECT_EQ(casimir_relation_scalar(0), rf(q_int(2)));
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(casimir_relation_scalar(n), rf(q_int(2 * (n + 1))) / rf(q_int(n + 1)));
  for (int a = 0; a <= 12; ++a)
    for (int b = a + 1; b <= 12; ++b) EXPECT_FALSE(casimir_relation_scalar(a) == casimir_relation_scalar(b));
}

TEST(CasimirRelation, ActsAsScalarOnImages) {
  for (int n = 1; n <= 6; ++n) {
    const auto rep = casimir_relation_check(n);
    EXPECT_TRUE(rep.ok) << n;
    for (const auto& c : rep.checks.items) EXPECT_TRUE(c.ok) << n << " " << c.name;
  }
}

TEST(ModuleIdentification, PsiLandsInLowestImage) {
  for (int n = 1; n <= 6; ++n)
    for (int m2 = n % 2; m2 <= n; m2 += 2) {
      const auto rep = module_identification_check(n, m2);
      for (const auto& c : rep.items) EXPECT_TRUE(c.ok) << n << " " << m2 << " " << c.name << " " << c.detail;
    }
}
