#include <gtest/gtest.h>

#include "tlq/rootlimit.hpp"
#include "tlq/spin_basis.hpp"
#include "tlq/uq_pairing.hpp"

using namespace tlq;

TEST(UqPairing, SixSitesCubeRoot) {
  const UqDecompositionReport r = uq_pair_decompose(6, RootSpec(3));
  std::vector<std::string> got;
  for (const auto& m : r.modules) got.push_back(std::to_string(m.count) + "x" + uq_module_label(m));
  EXPECT_EQ(got, (std::vector<std::string>{"1xU_{3,2}", "4xU_{2,0}", "1xU_0", "9xM_1"}));
  std::vector<unsigned long long> dims;
  for (const auto& m : r.modules) dims.push_back(m.dimension);
  EXPECT_EQ(dims, (std::vector<unsigned long long>{12, 6, 1, 3}));
  EXPECT_EQ(r.total, 64u);
  for (const auto& c : r.checks.items) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
}

TEST(UqPairing, OmegaAlternatingSum) {
  // orbit {0, 2, 3} of n = 6, p = 3
  const std::vector<int> orb{0, 4, 6};
  EXPECT_EQ(omega_count(6, orb, 2), 1);
  EXPECT_EQ(omega_count(6, orb, 1), 4);
  EXPECT_EQ(omega_count(6, orb, 0), 1);
}

TEST(UqPairing, AllSmallChains) {
  for (int n = 1; n <= 7; ++n)
    for (int p = 2; p <= 5; ++p) {
      const UqDecompositionReport r = uq_pair_decompose(n, RootSpec(p));
      for (const auto& c : r.checks.items) EXPECT_TRUE(c.ok) << n << " " << p << " " << c.name << " " << c.detail;
      // critical towers carry Gamma copies, and every count is positive
      for (const auto& m : r.modules) {
        EXPECT_GT(m.count, 0);
        if (m.kind == UqModuleKind::Critical) EXPECT_EQ(static_cast<unsigned long long>(m.count), gamma_multiplicity(n, m.j2));
        if (m.kind == UqModuleKind::Paired) EXPECT_EQ(((m.j2 + m.partner_j2) / 2 + 1) % p, 0);
      }
    }
}

TEST(UqPairing, EightSites) {
  for (int p : {2, 3}) {
    const UqDecompositionReport r = uq_pair_decompose(8, RootSpec(p));
    EXPECT_TRUE(r.checks.ok()) << p;
  }
}

TEST(UqPairing, SemisimpleAtI) {
  const UqDecompositionReport r = uq_pair_decompose(5, RootSpec(2));
  for (const auto& m : r.modules) EXPECT_EQ(m.kind, UqModuleKind::Critical);
  EXPECT_TRUE(r.checks.ok());
}

TEST(UqPairing, RejectsLargeChains) { EXPECT_THROW(uq_pair_decompose(kUqPairingMaxN + 1, RootSpec(3)), std::invalid_argument); }
