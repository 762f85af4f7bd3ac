#include "tlq/laurent_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tlq {
namespace {

using ZPoly = std::vector<mpz_class>;  // ascending coefficients, no trailing zeros

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zmake_primitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  mpz_class g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// lc(b)^k * a mod b, computed in place without fractions.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  mpz_class t;
  while (a.size() > db) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) {
      t = la * b[i];
      a[i + shift] -= t;
    }
    ztrim(a);
  }
  return a;
}

// Degree of gcd(a, b) modulo a word-size prime, or -1 if the prime divides a leading coefficient.
int gcd_degree_mod(const ZPoly& a, const ZPoly& b, std::uint64_t p) {
  auto reduce = [p](const ZPoly& z) {
    std::vector<std::uint64_t> r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
    return r;
  };
  auto x = reduce(a);
  auto y = reduce(b);
  if (x.back() == 0 || y.back() == 0) return -1;
  auto mulmod = [p](std::uint64_t u, std::uint64_t w) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(u) * w) % p);
  };
  auto powmod = [&](std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return r;
  };
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(x);
  trim(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::uint64_t inv = powmod(y.back(), p - 2);
    while (x.size() >= y.size()) {
      std::uint64_t f = mulmod(x.back(), inv);
      std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) {
        std::uint64_t s = mulmod(f, y[i]);
        x[i + shift] = (x[i + shift] + p - s) % p;
      }
      trim(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

}  // namespace

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) { trim(); }

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
  LaurentPoly p;
  if (!c.is_zero()) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back().is_zero()) coeffs_.pop_back();
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

Rational LaurentPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

bool LaurentPoly::exponents_have_parity(int parity) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero() && (((low_ + static_cast<int>(i)) % 2) + 2) % 2 != parity) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  if (static_cast<int>(coeffs_.size()) < hi - lo + 1) coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  add_mul(r, a, b);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void add_mul(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  int lo = a.low_ + b.low_;
  int hi = a.high() + b.high();
  if (acc.is_zero()) {
    acc.low_ = lo;
    acc.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  } else {
    if (lo < acc.low_) {
      acc.coeffs_.insert(acc.coeffs_.begin(), static_cast<std::size_t>(acc.low_ - lo), Rational(0));
      acc.low_ = lo;
    }
    if (hi > acc.high()) acc.coeffs_.resize(static_cast<std::size_t>(hi - acc.low_ + 1));
  }
  const std::size_t off = static_cast<std::size_t>(lo - acc.low_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const Rational& ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      add_mul(acc.coeffs_[off + i + j], ai, b.coeffs_[j]);
    }
  }
  acc.trim();
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return *this;
  LaurentPoly r;
  r.low_ = -high();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

LaurentPoly LaurentPoly::scaled_exponents(int k) const {
  if (k == 0) throw std::invalid_argument("LaurentPoly::scaled_exponents: k must be nonzero");
  LaurentPoly r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) r += monomial((low_ + static_cast<int>(i)) * k, coeffs_[i]);
  }
  return r;
}

LaurentPoly LaurentPoly::compressed_exponents(int k) const {
  if (k <= 0) throw std::invalid_argument("LaurentPoly::compressed_exponents: k must be positive");
  LaurentPoly r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    int e = low_ + static_cast<int>(i);
    if (e % k != 0) throw std::domain_error("LaurentPoly::compressed_exponents: exponent not divisible");
    r += monomial(e / k, coeffs_[i]);
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& v) const {
  if (is_zero()) return Rational(0);
  if (v.is_zero()) {
    if (low_ < 0) throw std::domain_error("LaurentPoly::eval: negative power of zero");
    return coeff(0);
  }
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= v;
    acc += *it;
  }
  Rational scale(1);
  Rational base = low_ >= 0 ? v : v.inverse();
  for (int k = 0; k < std::abs(low_); ++k) scale *= base;
  return acc * scale;
}

std::complex<double> LaurentPoly::eval(std::complex<double> v) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + it->to_double();
  return acc * std::pow(v, low_);
}

bool LaurentPoly::try_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (a.is_zero()) {
    quotient = LaurentPoly();
    return true;
  }
  const auto& bc = b.coeffs_;
  const std::size_t db = bc.size() - 1;
  if (a.coeffs_.size() < bc.size()) return false;
  std::vector<Rational> rem = a.coeffs_;
  const std::size_t dq = rem.size() - bc.size();
  std::vector<Rational> q(dq + 1);
  const Rational& lb = bc.back();
  const bool unit_lead = lb.is_one();
  Rational c;
  for (std::size_t k = dq + 1; k-- > 0;) {
    Rational& top = rem[k + db];
    if (top.is_zero()) continue;
    c = unit_lead ? top : top / lb;
    const Rational neg = -c;
    for (std::size_t i = 0; i <= db; ++i) {
      if (bc[i].is_zero()) continue;
      add_mul(rem[k + i], neg, bc[i]);
    }
    q[k] = c;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (!rem[i].is_zero()) return false;
  }
  quotient = LaurentPoly(a.low_ - b.low_, std::move(q));
  return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!try_div(a, b, q)) throw std::domain_error("LaurentPoly::exact_div: not divisible");
  return q;
}

LaurentPoly LaurentPoly::primitive_integer_part() const {
  if (is_zero()) return *this;
  mpz_class l = 1;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  }
  ZPoly z;
  z.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    mpq_class t = c.to_mpq() * l;
    z.push_back(t.get_num());
  }
  zmake_primitive(z);
  std::vector<Rational> out;
  out.reserve(z.size());
  for (auto& c : z) out.emplace_back(c);
  return LaurentPoly(low_, std::move(out));
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  auto to_z = [](const LaurentPoly& p) {
    LaurentPoly pp = p.unit_normal_part().primitive_integer_part();
    ZPoly z;
    z.reserve(pp.coeffs_.size());
    for (const auto& c : pp.coeffs_) z.push_back(c.numerator());
    return z;
  };
  auto monic = [](const ZPoly& z) {
    std::vector<Rational> out;
    out.reserve(z.size());
    Rational lead(z.back());
    for (const auto& c : z) out.push_back(Rational(c) / lead);
    return LaurentPoly(0, std::move(out));
  };
  if (a.is_zero()) return monic(to_z(b));
  if (b.is_zero()) return monic(to_z(a));
  ZPoly x = to_z(a);
  ZPoly y = to_z(b);
  if (x.size() == 1 || y.size() == 1) return LaurentPoly(1);
  for (std::uint64_t p : {4611686018427387847ULL, 2305843009213693951ULL}) {
    int d = gcd_degree_mod(x, y, p);
    if (d == 0) return LaurentPoly(1);
    if (d > 0) break;
  }
  if (x.size() < y.size()) std::swap(x, y);
  if (x == y) return monic(x);
  {
    // Cheap check: does the smaller divide the larger?
    LaurentPoly qx;
    std::vector<Rational> xr, yr;
    for (auto& c : x) xr.emplace_back(c);
    for (auto& c : y) yr.emplace_back(c);
    if (try_div(LaurentPoly(0, xr), LaurentPoly(0, yr), qx)) return monic(y);
  }
  while (!y.empty()) {
    ZPoly r = zprem(x, y);
    zmake_primitive(r);
    x = std::move(y);
    y = std::move(r);
    if (!y.empty() && y.size() == 1) return LaurentPoly(1);
  }
  zmake_primitive(x);
  return monic(x);
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    int e = low_ + static_cast<int>(i);
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace tlq
