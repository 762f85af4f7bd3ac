#pragma once

#include <string>
#include <vector>

#include "tlq/qnum.hpp"
#include "tlq/ratfunc.hpp"
#include "tlq/report.hpp"
#include "tlq/spinrep.hpp"

namespace tlq {

/// a_{i,j,m} in factored form; zero for i < j - m.
CycloProduct coeff_a_factored(int i, int j2, int m2);
/// (-1)^{i+j-m} qbin(i, j-m) qbin(i+j+m+1, i+1)^{-1} [2j+1]/[i+1]
RatFunc coeff_a(int i, int j2, int m2);

struct IdempotentCoeffs {
  int n = 0;
  int j2 = 0;
  int m2 = 0;
  std::vector<RatFunc> a;  ///< indexed by i = 0 .. n/2 - m
};

IdempotentCoeffs idempotent_coeffs(int n, int j2, int m2);

/// z_{j,m} = sum over j-m <= i <= n/2-m of a_{i,j,m} S_i, on W_m.
Operator<RatFunc> idempotent_z(int n, int j2, int m2);
/// z_{j,m} with coefficients evaluated at a rational q.
Operator<Rational> idempotent_z_probe(int n, int j2, int m2, const Rational& q);

/**
 * Every z_{j,m} on one weight space written as num[k] / den with a single
 * polynomial denominator, so identities reduce to Laurent-polynomial matrix
 * products.
 */
struct ClearedFamily {
  int n = 0;
  int m2 = 0;
  LaurentPoly den;
  std::vector<int> j2s;
  std::vector<Operator<LaurentPoly>> num;
};

ClearedFamily cleared_family(int n, int m2);

/// Weights j2 with m <= j <= n/2 and j = m mod 1.
std::vector<int> admissible_j2(int n, int m2);

enum class VerifyMode { Symbolic, Probe };

std::string to_string(VerifyMode mode);

struct IdempotentResult {
  int j2 = 0;
  unsigned long long expected_trace = 0;
  std::string trace;  ///< computed trace, as a rational function
  CheckList checks;
};

struct FamilyReport {
  int n = 0;
  int m2 = 0;
  VerifyMode mode = VerifyMode::Symbolic;
  std::vector<Rational> probes;
  std::vector<IdempotentResult> idempotents;
  CheckList family_checks;
  int commutant_dim = -1;
  bool ok() const;
};

inline constexpr int kSymbolicMaxN = 8;
inline constexpr int kProbeMaxN = 12;

std::vector<Rational> default_probes();

/**
 * Checks idempotence, mutual orthogonality, partition of unity, commutation
 * with every e_i, trace = Gamma_j, the image (z_{j,m} fixes the S^- descents of
 * weight-j highest-weight vectors and kills the others) and that the count
 * matches the commutant dimension.
 */
FamilyReport verify_family(int n, int m2, VerifyMode mode = VerifyMode::Symbolic,
                           const std::vector<Rational>& probes = default_probes());

/// Recomputes a_{n/2-m,j,m} from the lower coefficients by forcing z to kill |n/2, m>, and compares.
struct RecursionReport {
  bool ok = true;
  RatFunc from_recursion;
  RatFunc closed_form;
  bool coefficients_ok = true;  ///< coefficients of z^{(n)} and z^{(n-2)} differ only at i = n/2-m
  bool kills_top = true;        ///< z^{(n)}_{j,m} annihilates the descent of |n/2, n/2>
};

RecursionReport recursion_check(int n, int j2, int m2);

/// [2(2j+1)] / [2j+1]
RatFunc casimir_relation_scalar(int j2);

struct CasimirRelationReport {
  bool ok = true;
  CheckList checks;
};

/// (q - q^{-1})^2 S^2 + [2] acts on every z_{j,m} W_m as [2(2j+1)]/[2j+1]; the scalars are pairwise distinct.
CasimirRelationReport casimir_relation_check(int n);

/// z_{m,m} psi has full rank Gamma_m at every probe, and z_{j',m} psi = 0 exactly for j' > m.
CheckList module_identification_check(int n, int m2, const std::vector<Rational>& probes = default_probes());

}  // namespace tlq
