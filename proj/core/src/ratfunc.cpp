#include "tlq/ratfunc.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <ostream>
#include <stdexcept>

#include "tlq/cyclotomic.hpp"

namespace tlq {
namespace {

// Cyclotomic orders tried when splitting a denominator; q-number products only involve small orders.
constexpr int kCycloSearchLimit = 512;

bool maybe_root_of_unity_zero(const LaurentPoly& f, int k) {
  const double angle = 2.0 * M_PI / k;
  const std::complex<double> z(std::cos(angle), std::sin(angle));
  std::complex<double> acc(0.0, 0.0);
  double scale = 0.0;
  const auto& cs = f.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    double c = cs[i].to_double();
    acc = acc * z + c;
    scale += std::abs(c);
  }
  return std::abs(acc) <= 1e-7 * (scale + 1.0);
}

// Splits f (nonzero constant term) into cyclotomic factors; returns false if a non-cyclotomic part remains.
bool split_cyclotomic(LaurentPoly f, std::map<int, int>& factors) {
  LaurentPoly q;
  for (int k = 1; f.high() > 0 && k <= kCycloSearchLimit; ++k) {
    if (euler_phi(k) > f.high()) continue;
    while (f.high() > 0 && maybe_root_of_unity_zero(f, k)) {
      if (!LaurentPoly::try_div(f, cyclotomic_poly(k), q)) break;
      f = q;
      ++factors[k];
    }
  }
  return f.high() == 0;
}

LaurentPoly fast_gcd(const LaurentPoly& num, const LaurentPoly& den) {
  LaurentPoly d = den.unit_normal_part();
  if (d.high() == 0) return LaurentPoly(1);
  std::map<int, int> factors;
  if (!split_cyclotomic(d, factors)) return LaurentPoly::gcd(num, den);
  LaurentPoly n = num.unit_normal_part();
  LaurentPoly g(1);
  LaurentPoly q;
  for (const auto& [k, e] : factors) {
    const LaurentPoly& phi = cyclotomic_poly(k);
    for (int t = 0; t < e && n.high() >= phi.high(); ++t) {
      if (!maybe_root_of_unity_zero(n, k) || !LaurentPoly::try_div(n, phi, q)) break;
      n = q;
      g *= phi;
    }
  }
  return g;
}

}  // namespace

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  canonicalize();
}

RatFunc RatFunc::from_coprime(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  RatFunc f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  f.normalize_den();
  return f;
}

void RatFunc::normalize_den() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int shift = den_.low();
  if (shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  if (!den_.leading().is_one()) {
    Rational inv = den_.leading().inverse();
    den_ *= inv;
    num_ *= inv;
  }
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    LaurentPoly g = fast_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = LaurentPoly::exact_div(num_, g);
      den_ = LaurentPoly::exact_div(den_, g);
    }
  }
  normalize_den();
}

const LaurentPoly& RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("RatFunc::as_polynomial: nontrivial denominator");
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_constant()) {
      normalize_den();
      return *this;
    }
    canonicalize();
    return *this;
  }
  if (den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    canonicalize();
    return *this;
  }
  if (o.den_.is_constant()) {
    num_ += o.num_ * den_;
    canonicalize();
    return *this;
  }
  LaurentPoly g = fast_gcd(den_, o.den_);
  LaurentPoly od = LaurentPoly::exact_div(o.den_, g);
  LaurentPoly td = LaurentPoly::exact_div(den_, g);
  num_ = num_ * od + o.num_ * td;
  den_ = den_ * od;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly g1 = den_.is_constant() ? LaurentPoly(1) : fast_gcd(o.num_, den_);
  LaurentPoly g2 = o.den_.is_constant() ? LaurentPoly(1) : fast_gcd(num_, o.den_);
  LaurentPoly a = g2.is_constant() ? num_ : LaurentPoly::exact_div(num_, g2);
  LaurentPoly d = g2.is_constant() ? o.den_ : LaurentPoly::exact_div(o.den_, g2);
  LaurentPoly c = g1.is_constant() ? o.num_ : LaurentPoly::exact_div(o.num_, g1);
  LaurentPoly b = g1.is_constant() ? den_ : LaurentPoly::exact_div(den_, g1);
  num_ = a * c;
  den_ = b * d;
  normalize_den();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return from_coprime(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverted() const { return from_coprime(num_.inverted(), den_.inverted()); }

Rational RatFunc::eval(const Rational& v) const {
  Rational d = den_.eval(v);
  if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole at evaluation point");
  return num_.eval(v) / d;
}

std::complex<double> RatFunc::eval(std::complex<double> v) const { return num_.eval(v) / den_.eval(v); }

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_constant()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace tlq
