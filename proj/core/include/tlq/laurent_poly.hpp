#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tlq/rational.hpp"

namespace tlq {

/**
 * Laurent polynomial in v = q^{1/2} with rational coefficients.
 *
 * Stored densely from the lowest to the highest nonzero exponent; the zero
 * polynomial has no coefficients.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) { if (c != 0) { low_ = 0; coeffs_.emplace_back(c); } }
  LaurentPoly(const Rational& c) { if (!c.is_zero()) { low_ = 0; coeffs_.push_back(c); } }
  LaurentPoly(int low, std::vector<Rational> coeffs);

  static LaurentPoly monomial(int exponent, const Rational& c = Rational(1));
  /// v^2 = q
  static LaurentPoly q() { return monomial(2); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int exponent) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }
  std::size_t term_count() const;

  /// True when every exponent with a nonzero coefficient has the given parity.
  bool exponents_have_parity(int parity) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// acc += a * b
  friend void add_mul(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b);

  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes v -> v^{-1}.
  LaurentPoly inverted() const;
  /// Substitutes v -> v^k for k != 0.
  LaurentPoly scaled_exponents(int k) const;
  /// Divides every exponent by k; requires every exponent to be a multiple of k.
  LaurentPoly compressed_exponents(int k) const;

  Rational eval(const Rational& v) const;
  std::complex<double> eval(std::complex<double> v) const;

  /// Exact quotient a / b in the Laurent ring; throws std::domain_error when b does not divide a.
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
  /// Returns true and stores the quotient when b divides a.
  static bool try_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient);
  /// Monic greatest common divisor with no monomial factor (zero when both inputs are zero).
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Strips the monomial factor: returns the polynomial with nonzero constant term.
  LaurentPoly unit_normal_part() const { return is_zero() ? *this : shifted(-low_); }
  /// Content-free integer polynomial with positive leading coefficient, same roots.
  LaurentPoly primitive_integer_part() const;

  std::string to_string(const std::string& var = "v") const;

 private:
  int low_ = 0;
  std::vector<Rational> coeffs_;

  void trim();
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace tlq
