#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tlq {

/**
 * Exact rational number.
 *
 * Values whose reduced numerator and denominator fit in a signed 64-bit word
 * live inline; anything larger is held by a GMP rational. The representation
 * is canonical: a value is stored in GMP form only when it does not fit.
 */
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int n) noexcept : num_(n) {}
  Rational(long n) noexcept;
  Rational(long long n) noexcept;
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

  /// Parses "a", "-a" or "a/b".
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const noexcept { return !big_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// acc += a * b without building a temporary in the common small case.
  friend void add_mul(Rational& acc, const Rational& a, const Rational& b);

  /// Lowest common multiple of the denominators of a and b, as a rational.
  static Rational lcm_den(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  void assign(const mpq_class& q);
  void assign_i128(__int128 n, __int128 d);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace tlq
