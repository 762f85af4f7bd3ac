#include <gtest/gtest.h>

#include <set>

#include "tlq/idempotent.hpp"
#include "tlq/qnum.hpp"
#include "tlq/rootlimit.hpp"

using namespace tlq;

namespace {

// Order at q_c of [N]!: the number of multiples of p up to N.
int fact_order(int N, int p) { return N / p; }

int qbin_order(int N, int K, int p) { return fact_order(N, p) - fact_order(K, p) - fact_order(N - K, p); }

/// Order of a_{i,j,m} at a primitive root with q^{2p} = 1, counted from its factors.
int coefficient_order(int i, int j2, int m2, int p) {
  const int jm = (j2 - m2) / 2;
  const int top = i + (j2 + m2) / 2 + 1;
  return qbin_order(i, jm, p) - qbin_order(top, i + 1, p) + ((j2 + 1) % p == 0) - ((i + 1) % p == 0);
}

Operator<CycloNumber> neg(const Operator<CycloNumber>& a) {
  return a.map<CycloNumber>([](const CycloNumber& x) { return -x; });
}

}  // namespace

TEST(Labels, WorkedExamples) {
  const LabelTriple a = labels(6, 18, 18, 4);
  EXPECT_EQ(a.a, 2);
  EXPECT_EQ(a.d, 0);
  EXPECT_EQ(a.g, 1);
  const LabelTriple b = labels(6, 20, 18, 4);
  EXPECT_EQ(b.a, 2);
  EXPECT_EQ(b.d, 1);
  EXPECT_EQ(b.g, 2);
}

TEST(Labels, ZeroLineAndReconstruction) {
  for (int p = 2; p <= 7; ++p)
    for (int m2 = 0; m2 <= 12; ++m2) {
      const LabelTriple t = labels(0, m2, m2, p);
      EXPECT_EQ(t.a, 0);
      EXPECT_EQ(t.d, 0);
      EXPECT_EQ(t.g, (m2 + 1) % p);
      for (int i = 0; i < 15; ++i)
        for (int j2 = m2; j2 <= m2 + 16; j2 += 2) {
          const LabelTriple l = labels(i, j2, m2, p);
          EXPECT_EQ(l.r * p + l.a, i);
          EXPECT_EQ(l.u * p + l.d, (j2 - m2) / 2);
          EXPECT_EQ(l.w * p + l.g, i + (j2 + m2) / 2 + 1);
        }
    }
}

TEST(Critical, Examples) {
  EXPECT_TRUE(is_critical(2, 3));
  EXPECT_TRUE(is_critical(14, 5));
  EXPECT_FALSE(is_critical(4, 3));
  for (int j2 = 1; j2 <= 15; j2 += 2) EXPECT_TRUE(is_critical(j2, 2));
}

TEST(Singular, WorkedExamples) {
  EXPECT_TRUE(is_singular(6, 18, 18, RootSpec(4)));
  EXPECT_FALSE(is_singular(6, 22, 18, RootSpec(4)));
  EXPECT_FALSE(is_singular(6, 24, 18, RootSpec(4)));
}

TEST(Singular, AgreesWithFactorCount) {
  for (int n = 1; n <= 16; ++n)
    for (int p = 2; p <= 7; ++p)
      for (int m2 = n % 2; m2 <= n; m2 += 2)
        for (int j2 = m2; j2 <= n; j2 += 2)
          for (int i = (j2 - m2) / 2; i <= (n - m2) / 2; ++i) {
            const int ord = coefficient_order(i, j2, m2, p);
            ASSERT_GE(ord, -1);
            EXPECT_EQ(order_at_root(coeff_a(i, j2, m2), RootSpec(p)), ord);
            EXPECT_EQ(is_singular(i, j2, m2, RootSpec(p)), ord < 0) << n << " " << p << " " << i << " " << j2 << " " << m2;
            if (is_critical(j2, p)) EXPECT_GE(ord, 0);
          }
}

TEST(Singular, OtherPrimitiveRoots) {
  for (int p : {5, 7})
    for (int l = 2; l < p; ++l)
      for (int n = 2; n <= 12; ++n)
        for (int m2 = n % 2; m2 <= n; m2 += 2)
          for (int j2 = m2; j2 <= n; j2 += 2)
            for (int i = (j2 - m2) / 2; i <= (n - m2) / 2; ++i)
              EXPECT_EQ(is_singular(i, j2, m2, RootSpec(p, l)), coefficient_order(i, j2, m2, p) < 0);
}

TEST(BoundPairs, WorkedExample) {
  const PairClassification pc = bound_pairs(20, 6, 5);
  const std::vector<WeightPair> want{{6, 12}, {8, 10}, {18, 20}};
  EXPECT_EQ(pc.pairs, want);
  EXPECT_EQ(pc.critical, std::vector<int>{14});
  EXPECT_EQ(pc.unbound, std::vector<int>{16});
}

TEST(BoundPairs, SmallestCase) {
  const PairClassification pc = bound_pairs(2, 0, 2);
  EXPECT_EQ(pc.pairs, (std::vector<WeightPair>{{0, 2}}));
  EXPECT_TRUE(pc.critical.empty());
  EXPECT_TRUE(pc.unbound.empty());
}

TEST(BoundPairs, Properties) {
  for (int n = 1; n <= 30; ++n)
    for (int p = 2; p <= 9; ++p)
      for (int m2 = n % 2; m2 <= n; m2 += 2) {
        const PairClassification pc = bound_pairs(n, m2, p);
        std::set<int> used;
        for (const auto& [a, b] : pc.pairs) {
          EXPECT_LT(a, b);
          EXPECT_EQ(((a + b) / 2 + 1) % p, 0);
          EXPECT_EQ((a - m2) / 2 / p, (b - m2) / 2 / p);
          EXPECT_TRUE(used.insert(a).second);
          EXPECT_TRUE(used.insert(b).second);
        }
        for (int c : pc.critical) EXPECT_TRUE(used.insert(c).second);
        for (int u : pc.unbound) {
          EXPECT_TRUE(used.insert(u).second);
          // unbound weights only occur in the last, incomplete block
          EXPECT_EQ((u - m2) / 2 / p, (n - m2) / 2 / p);
        }
        EXPECT_EQ(used.size(), static_cast<std::size_t>((n - m2) / 2 + 1));
        if (p > n) EXPECT_TRUE(pc.pairs.empty());
      }
}

TEST(Cycles, SmallestCase) {
  const CycleDiagram d = cycle_diagram(2, 0, 2);
  ASSERT_EQ(d.cycles.size(), 2u);
  EXPECT_EQ(d.cycles[1].first_j2, 0);
  EXPECT_EQ(d.cycles[1].last_j2, 2);
  EXPECT_TRUE(d.cycles[1].rightmost);
  EXPECT_EQ(d.bound_pairs, (std::vector<WeightPair>{{0, 2}}));
}

TEST(Cycles, Structure) {
  for (int n = 1; n <= 30; ++n)
    for (int p = 2; p <= 7; ++p)
      for (int m2 = n % 2; m2 <= n; m2 += 2) {
        const CycleDiagram d = cycle_diagram(n, m2, p);
        for (const Cycle& c : d.cycles) {
          EXPECT_EQ(((c.first_j2 - m2) / 2) % p, 0);
          EXPECT_LE(c.size(), p);
          if (c.rightmost) EXPECT_EQ(c.size(), c.i % p + 1);
        }
        for (const auto& [i, j2] : d.singular) EXPECT_EQ(is_singular(i, j2, m2, RootSpec(p)), true);
      }
}

TEST(Limits, SmallestPairIsIdentity) {
  const RootSpec root(2);
  const Operator<CycloNumber> z = limit_idempotent(2, {0, 2}, 0, root);
  EXPECT_EQ(z, identity_operator(CycloScalars(root), 2, 0));
  const Operator<CycloNumber> nz = nilpotent(2, {0, 2}, 0, root);
  EXPECT_EQ(nz, neg(*s_r_at_root(2, 1, 0, root)));
  EXPECT_TRUE((nz * nz).mat.is_zero());
}

TEST(Limits, CoefficientSumsAreRegular) {
  for (int n = 2; n <= 12; ++n)
    for (int p = 2; p <= 7; ++p)
      for (int m2 = n % 2; m2 <= n; m2 += 2)
        for (const auto& [a, b] : bound_pairs(n, m2, p).pairs) {
          const IdempotentCoeffs lo = idempotent_coeffs(n, a, m2);
          const IdempotentCoeffs hi = idempotent_coeffs(n, b, m2);
          bool some_pole = false;
          for (std::size_t i = 0; i < lo.a.size(); ++i) {
            if (!lo.a[i].is_zero() && order_at_root(lo.a[i], RootSpec(p)) < 0) some_pole = true;
            const RatFunc s = lo.a[i] + hi.a[i];
            if (!s.is_zero()) EXPECT_GE(order_at_root(s, RootSpec(p)), 0) << n << " " << p << " " << a << " " << b;
          }
          EXPECT_TRUE(some_pole) << "bound pair without a pole: " << n << " " << p << " " << a << " " << b;
        }
}

TEST(Family, SemisimpleOddChains) {
  const RootSpec root(2);
  for (int n : {3, 5, 7})
    for (int m2 = 1; m2 <= n; m2 += 2) {
      const ProjectorFamily fam = projector_family(n, m2, root);
      for (const auto& mem : fam.members) {
        EXPECT_EQ(mem.kind, MemberKind::Critical);
        if (n <= 5) {
          const Operator<RatFunc> z = idempotent_z(n, mem.j2, m2);
          const Operator<CycloNumber> direct =
              z.map<CycloNumber>([&](const RatFunc& x) { return eval_at_root(x, root); });
          EXPECT_EQ(mem.projector, direct);
        }
      }
      EXPECT_TRUE(verify_projector_family(fam).ok());
    }
}

TEST(Family, SmallChainsAllRoots) {
  for (int n = 2; n <= 6; ++n)
    for (int p = 2; p <= 5; ++p) {
      if (p > n) continue;
      for (int m2 = n % 2; m2 <= n; m2 += 2) {
        const CheckList cl = verify_projector_family(projector_family(n, m2, RootSpec(p)));
        for (const auto& c : cl.items) EXPECT_TRUE(c.ok) << n << " " << p << " " << m2 << " " << c.name << " " << c.detail;
      }
    }
}

TEST(Family, NonPrincipalRoot) {
  for (int m2 = 0; m2 <= 6; m2 += 2) EXPECT_TRUE(verify_projector_family(projector_family(6, m2, RootSpec(3, 2))).ok());
}

TEST(Family, LargePNote) {
  const ProjectorFamily fam = projector_family(4, 0, RootSpec(7));
  EXPECT_FALSE(fam.note.empty());
  EXPECT_EQ(fam.members.size(), 3u);
  EXPECT_TRUE(verify_projector_family(fam).ok());
}

TEST(Multiplicities, SixSitesCubeRoot) {
  const DecompositionReport r = multiplicities(6, RootSpec(3));
  const std::vector<ModuleEntry> want{{ModuleKind::P, 2, 3, 9},
                                      {ModuleKind::P, 4, 1, 10},
                                      {ModuleKind::P, 6, 4, 6},
                                      {ModuleKind::V, 6, 3, 1}};
  EXPECT_EQ(r.entries, want);
  EXPECT_EQ(r.total, 64u);
  EXPECT_TRUE(r.checks.ok());
}

TEST(Multiplicities, WeightSpaceWorkedExample) {
  std::vector<std::string> got;
  for (const auto& e : weight_space_blocks(20, 6, RootSpec(5))) got.push_back(module_label(e));
  EXPECT_EQ(got, (std::vector<std::string>{"P_5", "P_6", "V_7", "V_8", "P_10"}));
}

TEST(Multiplicities, Generic) {
  const DecompositionReport r = multiplicities(7, std::nullopt);
  EXPECT_EQ(r.entries.size(), 4u);
  for (const auto& e : r.entries) EXPECT_EQ(e.multiplicity, e.j2 + 1);
  EXPECT_EQ(r.total, 128u);
  EXPECT_TRUE(r.checks.ok());
}

TEST(Multiplicities, AllRoutesAgree) {
  for (int n = 1; n <= 40; ++n)
    for (int p = 2; p <= 11; ++p) {
      const DecompositionReport r = multiplicities(n, RootSpec(p));
      for (const auto& c : r.checks.items) EXPECT_TRUE(c.ok) << n << " " << p << " " << c.name << " " << c.detail;
      for (const auto& e : r.entries) EXPECT_GT(e.multiplicity, 0);
    }
}

TEST(Orbits, Examples) {
  EXPECT_EQ(orbit_of(6, 0, 3), (std::vector<int>{0, 4, 6}));
  EXPECT_EQ(orbit_of(6, 2, 3), std::vector<int>{2});
  EXPECT_EQ(orbit_of(6, 6, 3), (std::vector<int>{0, 4, 6}));
}
