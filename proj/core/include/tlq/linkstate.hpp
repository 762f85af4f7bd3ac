#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tlq/laurent_poly.hpp"
#include "tlq/ratfunc.hpp"

namespace tlq {

/**
 * Non-crossing partial matching of n sites with no defect enclosed by an arc.
 *
 * partner[k] is the 1-based partner of site k+1, or 0 for a defect.
 */
struct LinkPattern {
  std::vector<int> partner;

  int n() const { return static_cast<int>(partner.size()); }
  int arcs() const;
  std::vector<std::pair<int, int>> arc_list() const;
  std::vector<int> defects() const;
  /// Checks planarity and that defects are never nested inside arcs.
  bool valid() const;
  /// e.g. "(())|" with "|" for defects
  std::string to_string() const;

  friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
  friend auto operator<=>(const LinkPattern&, const LinkPattern&) = default;
};

using LinkCombination = std::map<LinkPattern, RatFunc>;

/// All patterns on n sites with ell arcs, in lexicographic order of the partner array.
std::vector<LinkPattern> link_basis(int n, int ell);

/// Number of patterns, binom(n, ell) - binom(n, ell - 1).
unsigned long long link_count(int n, int ell);

/// Result of e_i on a single pattern: a scalar times a pattern, or zero.
struct LinkAction {
  bool zero = false;
  int loops = 0;
  LinkPattern result;
};

/// Diagrammatic action of e_i on one pattern, computed by joining endpoints with union-find.
LinkAction act_e(int i, const LinkPattern& w);
/// Linear extension; closed loops contribute the factor [2].
LinkCombination act_e(int i, const LinkCombination& v);

/// Image of a pattern in W_m, m = n/2 - arcs, as coefficients in the weight-space basis.
std::vector<LaurentPoly> psi(const LinkPattern& w);
/// Linear extension of psi.
std::vector<RatFunc> psi(int n, const LinkCombination& v);

struct PsiReport {
  bool ok = true;
  int checks = 0;
  std::string detail;
};

/// Checks rho(e_i) psi(w) = psi(e_i w) for every basis pattern and generator.
PsiReport verify_psi_homomorphism(int n, int ell);

/// Rank of the psi images of link_basis(n, ell) at a rational q.
int psi_image_rank(int n, int ell, const Rational& q);

/// Matrix of e_i on the standard module, columns indexed by link_basis(n, ell).
std::vector<std::vector<LaurentPoly>> standard_module_matrix(int n, int ell, int i);

}  // namespace tlq
