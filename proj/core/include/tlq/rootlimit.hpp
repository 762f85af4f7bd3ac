#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlq/cyclotomic.hpp"
#include "tlq/report.hpp"
#include "tlq/spinrep.hpp"

namespace tlq {

/// i = r p + a,  j - m = u p + d,  i + j + m + 1 = w p + g, with 0 <= a, d, g < p.
struct LabelTriple {
  int r = 0, a = 0;
  int u = 0, d = 0;
  int w = 0, g = 0;
  friend bool operator==(const LabelTriple&, const LabelTriple&) = default;
};

/// Requires i >= 0, m <= j; throws std::logic_error if g - d - a != 2m + 1 mod p.
LabelTriple labels(int i, int j2, int m2, int p);

/// 2j + 1 = 0 mod p.
bool is_critical(int j2, int p);

/// The label criterion alone: j non-critical, g <= a and d <= a.
bool singular_by_labels(int i, int j2, int m2, int p);

/**
 * Whether a_{i,j,m} has a pole at q_c. The label criterion is compared with
 * the order of the coefficient at the root; a disagreement throws std::logic_error.
 */
bool is_singular(int i, int j2, int m2, const RootSpec& root);

using WeightPair = std::pair<int, int>;  ///< (j2, j2') with j < j'

/// One run of consecutive normal j's on a line of the diagram.
struct Cycle {
  int i = 0;
  int first_j2 = 0;
  int last_j2 = 0;
  bool rightmost = false;
  int size() const { return (last_j2 - first_j2) / 2 + 1; }
};

struct CycleCell {
  bool spurious = false;
  bool singular = false;
  LabelTriple label;
};

/// Labels of every coefficient a_{i,j,m}, rows i = 0 .. n/2 - m and columns j = m .. n/2.
struct CycleDiagram {
  int n = 0;
  int m2 = 0;
  int p = 2;
  std::vector<int> j2s;
  std::vector<std::vector<CycleCell>> grid;  ///< grid[i][column]
  std::vector<Cycle> cycles;
  std::vector<WeightPair> bound_pairs;
  std::vector<std::pair<int, int>> singular;  ///< (i, j2)
  std::vector<int> critical_j2;
};

CycleDiagram cycle_diagram(int n, int m2, int p);

enum class WeightKind { Critical, Bound, Unbound };

std::string to_string(WeightKind k);

struct PairClassification {
  std::vector<WeightPair> pairs;
  std::vector<int> critical;
  std::vector<int> unbound;
  /// Kind of each admissible j2, in increasing order of j.
  std::vector<std::pair<int, WeightKind>> kinds;
};

/// Bound pairs among m <= j <= n/2 and the classification of every j.
PairClassification bound_pairs(int n, int m2, int p);

/// S_i evaluated at v_c, memoised per (n, i, m2, root).
std::shared_ptr<const Operator<CycloNumber>> s_r_at_root(int n, int i, int m2, const RootSpec& root);

/// z_{j,m} evaluated at q_c; throws std::domain_error if a coefficient has a pole.
Operator<CycloNumber> regular_idempotent(int n, int j2, int m2, const RootSpec& root);

/// Limit of z_{j,m} + z_{j',m} at q_c, coefficient by coefficient; throws std::logic_error on a residual pole.
Operator<CycloNumber> limit_idempotent(int n, WeightPair pair, int m2, const RootSpec& root);

/// Limit of [p] z_{j,m} for the smaller j of the pair; throws std::logic_error if it vanishes.
Operator<CycloNumber> nilpotent(int n, WeightPair pair, int m2, const RootSpec& root);

enum class MemberKind { Critical, Unbound, BoundPair };

std::string to_string(MemberKind k);

struct FamilyMember {
  MemberKind kind = MemberKind::Critical;
  int j2 = 0;
  int partner_j2 = -1;  ///< larger j of a bound pair
  unsigned long long expected_rank = 0;
  Operator<CycloNumber> projector;
  std::optional<Operator<CycloNumber>> nilpotent;
};

struct ProjectorFamily {
  int n = 0;
  int m2 = 0;
  RootSpec root;
  std::vector<FamilyMember> members;
  std::string note;
};

inline constexpr int kRootFamilyMaxN = 10;

ProjectorFamily projector_family(int n, int m2, const RootSpec& root);

/**
 * Exact checks over the cyclotomic field: idempotence, orthogonality,
 * partition of unity, commutation with every e_i, traces, nilpotent
 * properties, the member count, linear independence and, if requested, the
 * commutant dimension at q_c.
 */
CheckList verify_projector_family(const ProjectorFamily& fam, bool with_commutant = true);

// ---- multiplicities ----

enum class ModuleKind { P, V };

struct ModuleEntry {
  ModuleKind kind = ModuleKind::V;
  int j2 = 0;
  long long multiplicity = 0;
  unsigned long long dimension = 0;
  friend bool operator==(const ModuleEntry&, const ModuleEntry&) = default;
};

std::string module_label(const ModuleEntry& e);

struct DecompositionReport {
  int n = 0;
  std::optional<RootSpec> root;
  std::vector<ModuleEntry> entries;  ///< ordered by j, then P before V
  unsigned long long total = 0;      ///< sum of multiplicity * dimension
  CheckList checks;
};

/// Orbit of j among 0 or 1/2 <= j <= n/2, in increasing order; a critical j is alone.
std::vector<int> orbit_of(int n, int j2, int p);

/// Multiplicities of the indecomposable summands of (C^2)^{tensor n}; generic q when root is empty.
DecompositionReport multiplicities(int n, const std::optional<RootSpec>& root);

/// Same entries from the window form n = r_m p + s_m, -1 <= s_m <= p - 2.
std::vector<ModuleEntry> multiplicities_windowed(int n, int p);

/**
 * Summands of W_m alone: one P_{j'} per bound pair (j, j'), one V_j per critical
 * or unbound j; generic q gives V_j for every j >= m.
 */
std::vector<ModuleEntry> weight_space_blocks(int n, int m2, const std::optional<RootSpec>& root);

}  // namespace tlq
