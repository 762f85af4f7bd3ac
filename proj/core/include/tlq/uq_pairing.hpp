#pragma once

#include <string>
#include <vector>

#include "tlq/cyclotomic.hpp"
#include "tlq/report.hpp"

namespace tlq {

enum class UqModuleKind { Paired, Unpaired, Critical };

/// U_{j,j'} (paired towers), U_j (first orbit element) or M_j (critical).
struct UqModuleCount {
  UqModuleKind kind = UqModuleKind::Unpaired;
  int j2 = 0;
  int partner_j2 = -1;  ///< lower tower of a paired module
  long long count = 0;
  unsigned long long dimension = 0;
};

std::string uq_module_label(const UqModuleCount& m);

struct UqDecompositionReport {
  int n = 0;
  RootSpec root;
  std::vector<UqModuleCount> modules;  ///< paired, then unpaired, then critical; decreasing j within each
  unsigned long long total = 0;
  CheckList checks;
};

inline constexpr int kUqPairingMaxN = 10;

/// Omega_{j_i}: Gamma_{j_i} - Gamma_{j_{i+1}} + ... over the orbit above j_i.
long long omega_count(int n, const std::vector<int>& orbit_j2, std::size_t i);

/**
 * Builds highest-weight towers over Q(v_c) orbit by orbit, pairing every new
 * highest-weight vector of weight j_k with a partner w in W_{j_{k-1}} such that
 * S^+ w = |j_k, j_{k-1}+1>. The partner is the solution of that system with
 * every non-pivot unknown set to zero. The report checks the action of S^+ and
 * S^- on every tower, the counts against the alternating Gamma sums and, when
 * span_check is set, that the towers span each weight space.
 */
UqDecompositionReport uq_pair_decompose(int n, const RootSpec& root, bool span_check = true);

}  // namespace tlq
