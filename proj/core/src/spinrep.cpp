#include "tlq/spinrep.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tlq/qnum.hpp"

namespace tlq {

Rational ProbeScalars::mono(int e, int c) const {
  if (e % 2 != 0) throw std::domain_error("ProbeScalars: odd power of q^{1/2} at a rational probe");
  Rational out(c);
  const int k = e / 2;
  const Rational base = k >= 0 ? q : q.inverse();
  for (int t = 0; t < (k >= 0 ? k : -k); ++t) out *= base;
  return out;
}

Operator<LaurentPoly> tl_generator(int n, int i, int m2) { return tl_generator(LaurentScalars{}, n, i, m2); }

Operator<LaurentPoly> hecke_generator(int n, int i, int m2) {
  Operator<LaurentPoly> e = tl_generator(n, i, m2);
  return e - identity_operator(n, m2).scaled(LaurentPoly::monomial(-2));
}

Operator<LaurentPoly> uq_splus(int n, int m2) { return uq_splus(LaurentScalars{}, n, m2); }
Operator<LaurentPoly> uq_sminus(int n, int m2) { return uq_sminus(LaurentScalars{}, n, m2); }
Operator<LaurentPoly> hamiltonian(int n, int m2) { return hamiltonian(LaurentScalars{}, n, m2); }
Operator<LaurentPoly> identity_operator(int n, int m2) { return identity_operator(LaurentScalars{}, n, m2); }

Operator<LaurentPoly> divided_power(int sign, int r, int n, int m2) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("divided_power: sign must be +1 or -1");
  if (r < 0) throw std::invalid_argument("divided_power: r must be non-negative");
  WeightSpace dom(n, m2);
  const int target = m2 + 2 * sign * r;
  if (!WeightSpace::valid(n, target)) {
    return Operator<LaurentPoly>{n, m2, target, SparseMatrix<LaurentPoly>(0, dom.dim())};
  }
  Operator<LaurentPoly> acc = identity_operator(n, m2);
  int cur = m2;
  for (int t = 0; t < r; ++t) {
    acc = spin_ladder(LaurentScalars{}, n, cur, sign) * acc;
    cur += 2 * sign;
  }
  const LaurentPoly fact = q_factorial(r);
  return acc.map<LaurentPoly>([&](const LaurentPoly& x) {
    LaurentPoly quo;
    if (!LaurentPoly::try_div(x, fact, quo))
      throw std::logic_error("divided_power: entry not divisible by [r]!");
    return quo;
  });
}

CommutantGenerator s_r(int n, int r, int m2) {
  WeightSpace w(n, m2);
  const int top = (n - m2) / 2;
  if (r < 0 || r > top) {
    return {Operator<LaurentPoly>{n, m2, m2, SparseMatrix<LaurentPoly>(w.dim(), w.dim())}, false};
  }
  Operator<LaurentPoly> up = divided_power(+1, r, n, m2);
  Operator<LaurentPoly> down = divided_power(-1, r, n, m2 + 2 * r);
  return {down * up, true};
}

std::shared_ptr<const Operator<LaurentPoly>> s_r_shared(int n, int r, int m2) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const Operator<LaurentPoly>>> cache;
  const auto key = std::make_tuple(n, r, m2);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto op = std::make_shared<const Operator<LaurentPoly>>(s_r(n, r, m2).op);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, op).first->second;
}

Operator<RatFunc> casimir(int n, int m2) {
  WeightSpace w(n, m2);
  Operator<RatFunc> sm_sp{n, m2, m2, SparseMatrix<RatFunc>(w.dim(), w.dim())};
  if (WeightSpace::valid(n, m2 + 2)) sm_sp = to_ratfunc(uq_sminus(n, m2 + 2) * uq_splus(n, m2));
  const RatFunc h = q_half_int(m2 + 1);
  const RatFunc half = q_half_int(1);
  const RatFunc diag = h * h - half * half;
  return sm_sp + Operator<RatFunc>{n, m2, m2, SparseMatrix<RatFunc>::identity(w.dim(), diag)};
}

Operator<LaurentPoly> casimir_central(int n, int m2) {
  WeightSpace w(n, m2);
  Operator<LaurentPoly> sm_sp{n, m2, m2, SparseMatrix<LaurentPoly>(w.dim(), w.dim())};
  if (WeightSpace::valid(n, m2 + 2)) sm_sp = uq_sminus(n, m2 + 2) * uq_splus(n, m2);
  const LaurentPoly qq = LaurentPoly::monomial(2) - LaurentPoly::monomial(-2);
  const LaurentPoly a = LaurentPoly::monomial(m2 + 1) - LaurentPoly::monomial(-m2 - 1);
  const LaurentPoly b = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  const LaurentPoly diag = a * a - b * b + q_int(2);
  return sm_sp.scaled(qq * qq) + Operator<LaurentPoly>{n, m2, m2, SparseMatrix<LaurentPoly>::identity(w.dim(), diag)};
}

Operator<LaurentPoly> weight_q_int(int n, int m2, int k) {
  WeightSpace w(n, m2);
  return Operator<LaurentPoly>{n, m2, m2, SparseMatrix<LaurentPoly>::identity(w.dim(), q_int(m2 + k))};
}

std::vector<std::vector<LaurentPoly>> highest_weight_basis(int n, int j2) {
  WeightSpace w(n, j2);
  if (!WeightSpace::valid(n, j2 + 2)) {
    std::vector<std::vector<LaurentPoly>> out;
    for (std::size_t c = 0; c < w.dim(); ++c) {
      std::vector<LaurentPoly> e(w.dim());
      e[c] = LaurentPoly(1);
      out.push_back(std::move(e));
    }
    return out;
  }
  Operator<RatFunc> sp = to_ratfunc(uq_splus(n, j2));
  auto ker = kernel_basis(to_dense(sp.mat), sp.cols(), RatFunc(1));
  std::vector<std::vector<LaurentPoly>> out;
  out.reserve(ker.size());
  for (auto& vec : ker) {
    // clear denominators, then strip the common monomial and content
    LaurentPoly den(1);
    for (const auto& x : vec) {
      if (x.is_zero() || x.den().is_constant()) continue;
      const LaurentPoly g = LaurentPoly::gcd(den, x.den());
      den = LaurentPoly::exact_div(den * x.den(), g);
    }
    std::vector<LaurentPoly> row(vec.size());
    for (std::size_t k = 0; k < vec.size(); ++k) {
      if (vec[k].is_zero()) continue;
      row[k] = (vec[k] * RatFunc(den)).as_polynomial();
    }
    out.push_back(std::move(row));
  }
  return out;
}

ReversalReport spin_reversal_check(int n, int m2) {
  ReversalReport rep;
  WeightSpace a(n, m2);
  WeightSpace b(n, -m2);
  const std::uint32_t mask = n >= 32 ? 0xffffffffu : ((1u << n) - 1u);
  for (int i = 1; i < n; ++i) {
    const auto ea = tl_generator(n, i, m2);
    const auto eb = tl_generator(n, i, -m2);
    for (std::size_t r = 0; r < a.dim(); ++r) {
      const auto rr = static_cast<std::size_t>(b.index_of(a.state(r) ^ mask));
      for (std::size_t c = 0; c < a.dim(); ++c) {
        const auto cc = static_cast<std::size_t>(b.index_of(a.state(c) ^ mask));
        if (!(ea.mat.at(r, c) == eb.mat.at(rr, cc).inverted())) {
          std::ostringstream os;
          os << "e_" << i << " entry (" << a.label(a.state(r)) << ", " << a.label(a.state(c)) << ") differs";
          rep.ok = false;
          rep.detail = os.str();
          return rep;
        }
      }
    }
  }
  return rep;
}

Operator<CycloNumber> to_cyclo(const Operator<LaurentPoly>& op, const RootSpec& root) {
  return op.map<CycloNumber>([&](const LaurentPoly& x) { return eval_at_root(x, root); });
}

Operator<std::complex<double>> to_complex(const Operator<LaurentPoly>& op, std::complex<double> v) {
  return op.map<std::complex<double>>([&](const LaurentPoly& x) { return x.eval(v); });
}

Operator<RatFunc> to_ratfunc(const Operator<LaurentPoly>& op) {
  return op.map<RatFunc>([](const LaurentPoly& x) { return RatFunc(x); });
}

Rational eval_q(const LaurentPoly& f, const Rational& q) {
  if (f.is_zero()) return Rational(0);
  if (!f.exponents_have_parity(0)) throw std::domain_error("eval_q: odd power of q^{1/2}");
  return f.compressed_exponents(2).eval(q);
}

Rational eval_q(const RatFunc& f, const Rational& q) {
  if (f.is_zero()) return Rational(0);
  LaurentPoly num = f.num();
  LaurentPoly den = f.den();
  if (!num.exponents_have_parity(0) || !den.exponents_have_parity(0)) {
    if (num.exponents_have_parity(1) && den.exponents_have_parity(1)) {
      num = num.shifted(-1);
      den = den.shifted(-1);
    } else {
      throw std::domain_error("eval_q: odd power of q^{1/2}");
    }
  }
  const Rational d = den.compressed_exponents(2).eval(q);
  if (d.is_zero()) throw std::domain_error("eval_q: pole at probe point");
  return num.compressed_exponents(2).eval(q) / d;
}

Operator<Rational> to_probe(const Operator<LaurentPoly>& op, const Rational& q) {
  int parity = -1;
  for (std::size_t r = 0; r < op.rows() && parity < 0; ++r)
    if (!op.mat.row(r).empty()) parity = ((op.mat.row(r).front().second.low() % 2) + 2) % 2;
  if (parity < 0) parity = 0;
  return op.map<Rational>([&](const LaurentPoly& x) {
    if (!x.exponents_have_parity(parity)) throw std::domain_error("to_probe: mixed exponent parity");
    return eval_q(x.shifted(-parity), q);
  });
}

Operator<Rational> divided_power_probe(int sign, int r, int n, int m2, const Rational& q) {
  WeightSpace dom(n, m2);
  const int target = m2 + 2 * sign * r;
  if (!WeightSpace::valid(n, target)) return Operator<Rational>{n, m2, target, SparseMatrix<Rational>(0, dom.dim())};
  ProbeScalars base(q);
  // S^+ carries exponents of parity n-1; the compensating factors cancel in S_r
  ShiftedScalars<ProbeScalars> ring{base, sign > 0 ? -(n - 1) : (n - 1)};
  Operator<Rational> acc = identity_operator(base, n, m2);
  int cur = m2;
  for (int t = 0; t < r; ++t) {
    acc = spin_ladder(ring, n, cur, sign) * acc;
    cur += 2 * sign;
  }
  const Rational fact = eval_q(q_factorial(r), q);
  return acc.scaled(fact.inverse());
}

Operator<Rational> s_r_probe(int n, int r, int m2, const Rational& q) {
  WeightSpace w(n, m2);
  const int top = (n - m2) / 2;
  if (r < 0 || r > top) return Operator<Rational>{n, m2, m2, SparseMatrix<Rational>(w.dim(), w.dim())};
  return divided_power_probe(-1, r, n, m2 + 2 * r, q) * divided_power_probe(+1, r, n, m2, q);
}

std::vector<std::vector<Rational>> highest_weight_basis_probe(int n, int j2, const Rational& q) {
  WeightSpace w(n, j2);
  if (!WeightSpace::valid(n, j2 + 2)) {
    std::vector<std::vector<Rational>> out(1, std::vector<Rational>(w.dim()));
    out[0][0] = Rational(1);
    return out;
  }
  Operator<Rational> sp = divided_power_probe(+1, 1, n, j2, q);
  return kernel_basis(to_dense(sp.mat), sp.cols(), Rational(1));
}

}  // namespace tlq
