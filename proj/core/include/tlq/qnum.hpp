#pragma once

#include <map>
#include <optional>
#include <string>

#include "tlq/cyclotomic.hpp"
#include "tlq/laurent_poly.hpp"
#include "tlq/ratfunc.hpp"

namespace tlq {

/// [k] = (q^k - q^{-k}) / (q - q^{-1}) as a Laurent polynomial in v.
LaurentPoly q_int(int k);
/// [k]! for k >= 0.
LaurentPoly q_factorial(int k);
/// Symmetric q-binomial; zero when l < 0 or l > k, requires k >= 0.
LaurentPoly q_binomial(int k, int l);
/// [x][x-1]...[x-l+1]/[l]! for any integer x and l >= 0.
LaurentPoly q_binomial_general(int x, int l);

/**
 * Product of cyclotomic polynomials in v with integer exponents, times a
 * signed monomial. Every quotient of q-numbers has this shape, which lets it
 * be reduced to lowest terms without a polynomial gcd.
 */
class CycloProduct {
 public:
  CycloProduct() = default;

  static CycloProduct q_int(int k);
  static CycloProduct q_factorial(int k);
  static CycloProduct q_binomial(int k, int l);

  bool is_zero() const { return zero_; }
  int sign() const { return sign_; }
  int shift() const { return shift_; }
  const std::map<int, int>& exponents() const { return exps_; }
  /// Exponent of Phi_d in the product (negative for a pole).
  int multiplicity(int d) const;

  CycloProduct& operator*=(const CycloProduct& o);
  CycloProduct& operator/=(const CycloProduct& o);
  friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }
  friend CycloProduct operator/(CycloProduct a, const CycloProduct& b) { return a /= b; }
  CycloProduct& negate() {
    sign_ = -sign_;
    return *this;
  }

  RatFunc to_ratfunc() const;

 private:
  bool zero_ = false;
  int sign_ = 1;
  int shift_ = 0;
  std::map<int, int> exps_;
};

/// Order of vanishing at v = v_c (negative for a pole), by repeated division by Phi_M.
int order_at_root(const LaurentPoly& f, const RootSpec& root);
int order_at_root(const RatFunc& f, const RootSpec& root);

/// Value at v = v_c; throws std::domain_error at a pole.
CycloNumber eval_at_root(const RatFunc& f, const RootSpec& root);

/// Leading behaviour of qbin(kp + a, k'p + a') at q_c.
struct QLucasResult {
  long long binomial = 0;   ///< ordinary binomial coefficient binom(k, k')
  long long q_exponent = 0; ///< exponent of q in the phase factor
  CycloNumber reduced;      ///< qbin(a, a') at q_c
  int lhs_order = 0;        ///< order of vanishing of the full q-binomial
  bool consistent = false;  ///< the asymptotic statement checked out exactly
  std::string detail;
};

/// Checks the q-Lucas asymptotics for k, k' >= 0 and 0 <= a, a' < p.
QLucasResult q_lucas(int k, int kp, int a, int ap, const RootSpec& root);

/// Both sides of a closed-form summation identity.
struct IdentityCheck {
  RatFunc lhs;
  RatFunc rhs;
  bool holds() const { return lhs == rhs; }
};

/// Alternating sum over r <= l of [2j+k+r]! / ([r]! [2j+r+1]! [k-r]!) and its closed form; 0 <= l < k.
IdentityCheck identity_A(int l, int j2, int k);
/// Alternating sum over r <= l of [2m+r]! [2m+2r+1] / ([r]! [i-r]! [2m+r+i+1]!) and its closed form; 0 <= l < i.
IdentityCheck identity_B(int l, int m2, int i);

/// (q - q^{-1})^2 ([j+1/2]^2 - [1/2]^2) + [2] against [2(2j+1)]/[2j+1].
IdentityCheck casimir_scalar_identity(int j2);

/// Sum over j in m..m+i of (-1)^{j-m}[2j+1] qbin(i, j-m) / qbin(i+j+m+1, i+1), which vanishes for i >= 1.
RatFunc alternating_trace_sum(int i, int m2);

/// (v^k - v^{-k}) / (v^2 - v^{-2}), i.e. [k/2] for any integer k.
RatFunc q_half_int(int k);

}  // namespace tlq
