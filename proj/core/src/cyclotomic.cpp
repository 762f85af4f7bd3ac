#include "tlq/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tlq {

const LaurentPoly& cyclotomic_poly(int d) {
  if (d <= 0) throw std::invalid_argument("cyclotomic_poly: order must be positive");
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // divisors of d in increasing order; each is x^e - 1 over its proper divisors
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0 || cache.count(e)) continue;
    LaurentPoly g = LaurentPoly::monomial(e) - LaurentPoly(1);
    for (int k = 1; k < e; ++k) {
      if (e % k == 0) g = LaurentPoly::exact_div(g, cache.at(k));
    }
    cache.emplace(e, std::move(g));
  }
  return cache.at(d);
}

int euler_phi(int d) {
  int result = d;
  for (int k = 2; k * k <= d; ++k) {
    if (d % k == 0) {
      while (d % k == 0) d /= k;
      result -= result / k;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

RootSpec::RootSpec(int p_, int l_) : p(p_), l(l_) {
  if (p < 2) throw std::invalid_argument("RootSpec: p must be at least 2");
  if (std::gcd(p, l) != 1) throw std::invalid_argument("RootSpec: gcd(l, p) must be 1");
}

int RootSpec::q_order() const { return (l % 2 != 0) ? 2 * p : p; }

int RootSpec::v_exponent() const {
  const int M = v_order();
  if (l % 2 != 0) return ((l % M) + M) % M;  // v_c = exp(i pi l / (2p)) = zeta_{4p}^l
  // q_c = zeta_p^{l/2}; pick e odd with 2e = l (mod 2p)
  int e = l / 2;
  if (e % 2 == 0) e += p;
  return ((e % M) + M) % M;
}

std::complex<double> RootSpec::v_value() const {
  const double angle = 2.0 * M_PI * v_exponent() / v_order();
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> RootSpec::q_value() const {
  auto v = v_value();
  return v * v;
}

std::string RootSpec::to_string() const {
  std::ostringstream os;
  os << "exp(i*pi*" << l << "/" << p << ")";
  return os.str();
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
  const LaurentPoly& phi = cyclotomic_poly(order);
  degree_ = phi.high();
  modulus_.assign(phi.coeffs().begin(), phi.coeffs().end());
  powers_.resize(static_cast<std::size_t>(order));
  for (int t = 0; t < order; ++t) {
    std::vector<Rational> c(static_cast<std::size_t>(t + 1));
    c[static_cast<std::size_t>(t)] = Rational(1);
    reduce(c);
    powers_[static_cast<std::size_t>(t)] = std::move(c);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(order);
  cache.emplace(order, f);
  return f;
}

const std::vector<Rational>& CyclotomicField::power(int t) const {
  t %= order_;
  if (t < 0) t += order_;
  return powers_[static_cast<std::size_t>(t)];
}

void CyclotomicField::reduce(std::vector<Rational>& c) const {
  const std::size_t d = static_cast<std::size_t>(degree_);
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k].is_zero()) continue;
    const Rational f = -c[k];
    // modulus is monic: subtract c[k] * x^{k-d} * Phi
    for (std::size_t i = 0; i < d; ++i) {
      if (!modulus_[i].is_zero()) add_mul(c[k - d + i], f, modulus_[i]);
    }
    c[k] = Rational(0);
  }
  c.resize(d);
}

CycloNumber::CycloNumber(std::shared_ptr<const CyclotomicField> field, const Rational& c) : field_(std::move(field)) {
  if (!c.is_zero()) {
    c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
    c_[0] = c;
  }
}

CycloNumber::CycloNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  field_->reduce(c_);
  normalize();
}

CycloNumber CycloNumber::root_power(std::shared_ptr<const CyclotomicField> field, int t) {
  CycloNumber r;
  r.c_ = field->power(t);
  r.field_ = std::move(field);
  r.normalize();
  return r;
}

void CycloNumber::normalize() {
  for (const auto& x : c_) {
    if (!x.is_zero()) return;
  }
  c_.clear();
}

bool CycloNumber::is_zero() const { return c_.empty(); }

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Rational CycloNumber::rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

void CycloNumber::adopt(const CycloNumber& o) {
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (field_->order() != o.field_->order()) throw std::invalid_argument("CycloNumber: mismatched fields");
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  adopt(o);
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    c_ = o.c_;
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const Rational& r) {
  if (r.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= r;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  adopt(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (!o.c_[j].is_zero()) add_mul(prod[i + j], c_[i], o.c_[j]);
    }
  }
  field_->reduce(prod);
  c_ = std::move(prod);
  normalize();
  return *this;
}

void add_mul(CycloNumber& acc, const CycloNumber& a, const CycloNumber& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  acc.adopt(a);
  acc.adopt(b);
  const auto& field = acc.field_;
  const std::size_t d = static_cast<std::size_t>(field->degree());
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!b.c_[j].is_zero()) add_mul(prod[i + j], a.c_[i], b.c_[j]);
    }
  }
  field->reduce(prod);
  if (acc.c_.empty()) acc.c_.assign(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) acc.c_[i] += prod[i];
  acc.normalize();
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNumber: inverse of zero");
  // Extended Euclid on (a, Phi) over Q.
  using Poly = std::vector<Rational>;
  auto trim = [](Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  auto divmod = [&](Poly a, const Poly& b, Poly& q) {
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
      Rational c = a.back() / b.back();
      std::size_t s = a.size() - b.size();
      q[s] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
      trim(a);
    }
    trim(q);
    return a;
  };
  auto mulsub = [&](const Poly& x, const Poly& q, const Poly& y) {  // x - q*y
    Poly r = x;
    if (!q.empty() && !y.empty()) {
      if (r.size() < q.size() + y.size() - 1) r.resize(q.size() + y.size() - 1);
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] -= q[i] * y[j];
    }
    trim(r);
    return r;
  };
  Poly r0 = field_->modulus(), r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q;
    Poly r2 = divmod(r0, r1, q);
    Poly s2 = mulsub(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant: s1 * a = r1 mod Phi
  Rational inv = r1.at(0).inverse();
  for (auto& x : s1) x *= inv;
  return CycloNumber(field_, s1);
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
  if (a.field_->order() != b.field_->order()) return false;
  return a.c_ == b.c_;
}

std::complex<double> CycloNumber::to_complex() const {
  if (c_.empty()) return {0.0, 0.0};
  const double angle = 2.0 * M_PI / field_->order();
  std::complex<double> x(std::cos(angle), std::sin(angle));
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
  return acc;
}

std::string CycloNumber::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (!c_[i].is_one()) os << "(" << c_[i] << ")*";
      os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return os.str();
}

CycloNumber eval_at_root(const LaurentPoly& f, const RootSpec& root) {
  auto field = CyclotomicField::get(root.v_order());
  if (f.is_zero()) return CycloNumber(field, Rational(0));
  const int M = root.v_order();
  const int e = root.v_exponent();
  std::vector<Rational> acc(static_cast<std::size_t>(field->degree()));
  const auto& cs = f.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    long long t = (static_cast<long long>(f.low() + static_cast<int>(i)) * e) % M;
    if (t < 0) t += M;
    const auto& pw = field->power(static_cast<int>(t));
    for (std::size_t k = 0; k < pw.size(); ++k) {
      if (!pw[k].is_zero()) add_mul(acc[k], cs[i], pw[k]);
    }
  }
  return CycloNumber(field, std::move(acc));
}

}  // namespace tlq
