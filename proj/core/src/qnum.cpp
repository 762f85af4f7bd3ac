#include "tlq/qnum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tlq {

LaurentPoly q_int(int k) {
  if (k == 0) return LaurentPoly();
  if (k < 0) return -q_int(-k);
  std::vector<Rational> c(static_cast<std::size_t>(4 * (k - 1) + 1));
  for (int t = 0; t < k; ++t) c[static_cast<std::size_t>(4 * t)] = Rational(1);
  return LaurentPoly(-2 * (k - 1), std::move(c));
}

LaurentPoly q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("q_factorial: negative argument");
  LaurentPoly r(1);
  for (int t = 2; t <= k; ++t) r *= q_int(t);
  return r;
}

LaurentPoly q_binomial(int k, int l) {
  if (k < 0) throw std::invalid_argument("q_binomial: negative top argument");
  if (l < 0 || l > k) return LaurentPoly();
  if (l == 0 || l == k) return LaurentPoly(1);
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  const auto key = std::make_pair(k, std::min(l, k - l));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly r = CycloProduct::q_binomial(k, l).to_ratfunc().as_polynomial();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, r);
  return r;
}

LaurentPoly q_binomial_general(int x, int l) {
  if (l < 0) return LaurentPoly();
  if (l == 0) return LaurentPoly(1);
  if (x >= 0) return q_binomial(x, l);
  CycloProduct p;
  for (int t = 0; t < l; ++t) p *= CycloProduct::q_int(x - t);
  p /= CycloProduct::q_factorial(l);
  return p.to_ratfunc().as_polynomial();
}

// ---- CycloProduct ----

CycloProduct CycloProduct::q_int(int k) {
  CycloProduct r;
  if (k == 0) {
    r.zero_ = true;
    return r;
  }
  if (k < 0) {
    r = q_int(-k);
    r.sign_ = -r.sign_;
    return r;
  }
  // [k] = v^{-2(k-1)} (v^{4k} - 1)/(v^4 - 1)
  r.shift_ = -2 * (k - 1);
  for (int d = 1; d <= 4 * k; ++d) {
    if ((4 * k) % d == 0 && d != 1 && d != 2 && d != 4) r.exps_[d] += 1;
  }
  return r;
}

CycloProduct CycloProduct::q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("CycloProduct::q_factorial: negative argument");
  CycloProduct r;
  for (int t = 2; t <= k; ++t) r *= q_int(t);
  return r;
}

CycloProduct CycloProduct::q_binomial(int k, int l) {
  if (k < 0) throw std::invalid_argument("CycloProduct::q_binomial: negative top argument");
  CycloProduct r;
  if (l < 0 || l > k) {
    r.zero_ = true;
    return r;
  }
  r = q_factorial(k);
  r /= q_factorial(l);
  r /= q_factorial(k - l);
  return r;
}

int CycloProduct::multiplicity(int d) const {
  auto it = exps_.find(d);
  return it == exps_.end() ? 0 : it->second;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& o) {
  zero_ = zero_ || o.zero_;
  sign_ *= o.sign_;
  shift_ += o.shift_;
  for (const auto& [d, e] : o.exps_) {
    int& x = exps_[d];
    x += e;
    if (x == 0) exps_.erase(d);
  }
  return *this;
}

CycloProduct& CycloProduct::operator/=(const CycloProduct& o) {
  if (o.zero_) throw std::domain_error("CycloProduct: division by zero");
  sign_ *= o.sign_;
  shift_ -= o.shift_;
  for (const auto& [d, e] : o.exps_) {
    int& x = exps_[d];
    x -= e;
    if (x == 0) exps_.erase(d);
  }
  return *this;
}

RatFunc CycloProduct::to_ratfunc() const {
  if (zero_) return RatFunc();
  LaurentPoly num = LaurentPoly::monomial(shift_, Rational(sign_));
  LaurentPoly den(1);
  for (const auto& [d, e] : exps_) {
    const LaurentPoly& phi = cyclotomic_poly(d);
    for (int t = 0; t < std::abs(e); ++t) {
      if (e > 0) num *= phi;
      else den *= phi;
    }
  }
  return RatFunc::from_coprime(std::move(num), std::move(den));
}

// ---- evaluation at roots of unity ----

namespace {

int cyclotomic_multiplicity(LaurentPoly f, const LaurentPoly& phi) {
  f = f.unit_normal_part();
  int count = 0;
  LaurentPoly q;
  while (f.high() >= phi.high() && LaurentPoly::try_div(f, phi, q)) {
    f = std::move(q);
    ++count;
  }
  return count;
}

}  // namespace

int order_at_root(const LaurentPoly& f, const RootSpec& root) {
  if (f.is_zero()) throw std::domain_error("order_at_root: zero has no finite order");
  return cyclotomic_multiplicity(f, cyclotomic_poly(root.v_order()));
}

int order_at_root(const RatFunc& f, const RootSpec& root) {
  if (f.is_zero()) throw std::domain_error("order_at_root: zero has no finite order");
  const LaurentPoly& phi = cyclotomic_poly(root.v_order());
  return cyclotomic_multiplicity(f.num(), phi) - cyclotomic_multiplicity(f.den(), phi);
}

CycloNumber eval_at_root(const RatFunc& f, const RootSpec& root) {
  if (f.is_zero()) return eval_at_root(LaurentPoly(), root);
  const LaurentPoly& phi = cyclotomic_poly(root.v_order());
  const int dk = cyclotomic_multiplicity(f.den(), phi);
  LaurentPoly num = f.num();
  LaurentPoly den = f.den();
  if (dk > 0) {
    const int nk = cyclotomic_multiplicity(num, phi);
    if (nk < dk) {
      throw std::domain_error("eval_at_root: pole of order " + std::to_string(dk - nk) + " at " + root.to_string());
    }
    for (int t = 0; t < dk; ++t) {
      num = LaurentPoly::exact_div(num, phi);
      den = LaurentPoly::exact_div(den, phi);
    }
  }
  return eval_at_root(num, root) / eval_at_root(den, root);
}

// ---- q-Lucas ----

namespace {

long long binomial(long long k, long long kp) {
  if (kp < 0 || kp > k) return 0;
  long long r = 1;
  for (long long t = 1; t <= kp; ++t) r = r * (k - kp + t) / t;
  return r;
}

}  // namespace

QLucasResult q_lucas(int k, int kp, int a, int ap, const RootSpec& root) {
  if (k < 0 || kp < 0 || a < 0 || ap < 0) throw std::invalid_argument("q_lucas: arguments must be nonnegative");
  const int p = root.p;
  QLucasResult r;
  r.binomial = binomial(k, kp);
  r.q_exponent = static_cast<long long>(a - ap) * kp * p + static_cast<long long>(k - kp) * (kp * p + ap) * p;
  LaurentPoly reduced = q_binomial(a, ap);
  r.reduced = eval_at_root(reduced, root);
  LaurentPoly lhs = q_binomial(k * p + a, kp * p + ap);
  r.lhs_order = lhs.is_zero() ? -1 : order_at_root(lhs, root);
  if (r.binomial == 0 || reduced.is_zero()) {
    r.consistent = lhs.is_zero() || r.lhs_order >= 1;
    r.detail = lhs.is_zero() ? "both sides vanish identically" : "left side vanishes at the root";
    return r;
  }
  // qbin(kp+a, k'p+a') / (q^e qbin(a, a')) must tend to binom(k, k')
  RatFunc ratio = RatFunc(lhs) / RatFunc(LaurentPoly::monomial(static_cast<int>(2 * r.q_exponent)) * reduced);
  int ord = order_at_root(ratio, root);
  if (ord != 0) {
    r.consistent = false;
    r.detail = "ratio has order " + std::to_string(ord);
    return r;
  }
  CycloNumber limit = eval_at_root(ratio, root);
  auto field = CyclotomicField::get(root.v_order());
  r.consistent = limit == CycloNumber(field, Rational(static_cast<long long>(r.binomial)));
  r.detail = r.consistent ? "ratio tends to the binomial coefficient" : "ratio limit " + limit.to_string();
  return r;
}

// ---- summation identities ----

IdentityCheck identity_A(int l, int j2, int k) {
  if (j2 < 0 || l < 0 || l >= k) throw std::invalid_argument("identity_A: requires 0 <= l < k and 2j >= 0");
  using CP = CycloProduct;
  IdentityCheck out;
  for (int r = 0; r <= l; ++r) {
    CP term = CP::q_factorial(j2 + k + r);
    term /= CP::q_factorial(r);
    term /= CP::q_factorial(j2 + r + 1);
    term /= CP::q_factorial(k - r);
    if (r % 2) term.negate();
    out.lhs += term.to_ratfunc();
  }
  CP rhs = CP::q_factorial(j2 + k + l + 1);
  rhs /= CP::q_factorial(j2 + l + 1);
  rhs /= CP::q_factorial(k - l - 1);
  rhs /= CP::q_factorial(l);
  rhs /= CP::q_int(j2 + k + 1);
  rhs /= CP::q_int(k);
  if (l % 2) rhs.negate();
  out.rhs = rhs.to_ratfunc();
  return out;
}

IdentityCheck identity_B(int l, int m2, int i) {
  if (m2 < 0 || l < 0 || l >= i) throw std::invalid_argument("identity_B: requires 0 <= l < i and 2m >= 0");
  using CP = CycloProduct;
  IdentityCheck out;
  for (int r = 0; r <= l; ++r) {
    CP term = CP::q_factorial(m2 + r);
    term *= CP::q_int(m2 + 2 * r + 1);
    term /= CP::q_factorial(r);
    term /= CP::q_factorial(i - r);
    term /= CP::q_factorial(m2 + r + i + 1);
    if (r % 2) term.negate();
    out.lhs += term.to_ratfunc();
  }
  CP rhs = CP::q_factorial(m2 + l + 1);
  rhs /= CP::q_factorial(m2 + i + l + 1);
  rhs /= CP::q_factorial(i - l - 1);
  rhs /= CP::q_factorial(l);
  rhs /= CP::q_int(i);
  if (l % 2) rhs.negate();
  out.rhs = rhs.to_ratfunc();
  return out;
}

RatFunc q_half_int(int k) {
  return RatFunc(LaurentPoly::monomial(k) - LaurentPoly::monomial(-k), LaurentPoly::monomial(2) - LaurentPoly::monomial(-2));
}

IdentityCheck casimir_scalar_identity(int j2) {
  if (j2 < 0) throw std::invalid_argument("casimir_scalar_identity: 2j must be nonnegative");
  IdentityCheck out;
  RatFunc qdiff(LaurentPoly::monomial(2) - LaurentPoly::monomial(-2));
  RatFunc top = q_half_int(j2 + 1);
  RatFunc half = q_half_int(1);
  out.lhs = qdiff * qdiff * (top * top - half * half) + RatFunc(q_int(2));
  out.rhs = RatFunc(q_int(2 * (j2 + 1)), q_int(j2 + 1));
  return out;
}

RatFunc alternating_trace_sum(int i, int m2) {
  if (i < 0 || m2 < 0) throw std::invalid_argument("alternating_trace_sum: arguments must be nonnegative");
  RatFunc sum;
  for (int t = 0; t <= i; ++t) {
    CycloProduct term = CycloProduct::q_int(m2 + 2 * t + 1);
    term *= CycloProduct::q_binomial(i, t);
    term /= CycloProduct::q_binomial(i + m2 + t + 1, i + 1);
    if (t % 2) term.negate();
    sum += term.to_ratfunc();
  }
  return sum;
}

}  // namespace tlq
