#pragma once

#include <iosfwd>
#include <string>

#include "tlq/laurent_poly.hpp"

namespace tlq {

/**
 * Element of Q(v) kept in lowest terms.
 *
 * The denominator is a monic polynomial with nonzero constant term, so two
 * equal rational functions always have identical numerator and denominator.
 */
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  /// Builds from a numerator and denominator already known to be coprime.
  static RatFunc from_coprime(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Numerator as a Laurent polynomial; throws unless the denominator is 1.
  const LaurentPoly& as_polynomial() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  friend void add_mul(RatFunc& acc, const RatFunc& a, const RatFunc& b) { acc += a * b; }

  RatFunc inverse() const;
  /// v -> v^{-1}
  RatFunc inverted() const;

  Rational eval(const Rational& v) const;
  std::complex<double> eval(std::complex<double> v) const;

  std::string to_string(const std::string& var = "v") const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;

  void canonicalize();
  void normalize_den();
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace tlq
