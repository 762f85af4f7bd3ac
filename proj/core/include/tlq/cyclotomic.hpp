#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "tlq/laurent_poly.hpp"
#include "tlq/rational.hpp"

namespace tlq {

/// The d-th cyclotomic polynomial as an ordinary polynomial (low exponent 0).
const LaurentPoly& cyclotomic_poly(int d);

/// Euler's totient.
int euler_phi(int d);

/**
 * A root of unity q_c = exp(i*pi*l/p) with gcd(l, p) = 1.
 *
 * The companion square root v_c is chosen as a primitive root of order
 * 2 * ord(q_c), so that Q(v_c) is the cyclotomic field of that order.
 */
struct RootSpec {
  int p = 2;
  int l = 1;

  RootSpec() = default;
  RootSpec(int p_, int l_ = 1);

  /// Multiplicative order of q_c.
  int q_order() const;
  /// Multiplicative order M of v_c.
  int v_order() const { return 2 * q_order(); }
  /// Exponent e with v_c = exp(2*pi*i*e/M).
  int v_exponent() const;
  std::complex<double> v_value() const;
  std::complex<double> q_value() const;
  std::string to_string() const;

  friend bool operator==(const RootSpec& a, const RootSpec& b) { return a.p == b.p && a.l == b.l; }
};

/// The field Q(zeta_M) represented as Q[x]/Phi_M(x).
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  const std::vector<Rational>& modulus() const { return modulus_; }
  /// x^t reduced modulo Phi_M, for 0 <= t < M.
  const std::vector<Rational>& power(int t) const;
  /// Reduces an arbitrary-length coefficient vector in place.
  void reduce(std::vector<Rational>& c) const;

  explicit CyclotomicField(int order);

 private:
  int order_;
  int degree_;
  std::vector<Rational> modulus_;
  std::vector<std::vector<Rational>> powers_;
};

/// Element of a cyclotomic field; a default-constructed value is the zero of every field.
class CycloNumber {
 public:
  CycloNumber() = default;
  CycloNumber(std::shared_ptr<const CyclotomicField> field, const Rational& c);
  CycloNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

  static CycloNumber root_power(std::shared_ptr<const CyclotomicField> field, int t);

  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator*=(const Rational& r);
  CycloNumber& operator/=(const CycloNumber& o);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator*(CycloNumber a, const Rational& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  friend void add_mul(CycloNumber& acc, const CycloNumber& a, const CycloNumber& b);

  CycloNumber inverse() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> c_;  // length == degree, or empty for zero

  void adopt(const CycloNumber& o);
  void normalize();
};

inline bool is_zero(const CycloNumber& c) { return c.is_zero(); }

/// Evaluates a Laurent polynomial in v at v = v_c.
CycloNumber eval_at_root(const LaurentPoly& f, const RootSpec& root);

}  // namespace tlq
