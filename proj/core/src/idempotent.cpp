#include "tlq/idempotent.hpp"

#include <gmpxx.h>

#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tlq/linalg.hpp"
#include "tlq/linkstate.hpp"

namespace tlq {

namespace {

void require_weights(int j2, int m2) {
  if (m2 < 0) throw std::invalid_argument("idempotent: requires m >= 0");
  if (j2 < m2 || (j2 - m2) % 2 != 0) throw std::invalid_argument("idempotent: requires m <= j with j - m integral");
}

std::string half(int x2) {
  std::ostringstream os;
  if (x2 % 2 == 0) os << x2 / 2;
  else os << x2 << "/2";
  return os.str();
}

template <class T>
bool vec_zero(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!scalar_is_zero(x)) return false;
  return true;
}

template <class T>
std::vector<T> scaled(std::vector<T> v, const T& c) {
  for (auto& x : v)
    if (!scalar_is_zero(x)) x = x * c;
  return v;
}

/// (S^-)^{(j-m)} applied to every highest-weight vector of weight j, by repeated single lowering.
std::vector<std::vector<LaurentPoly>> descents(int n, int j2, int m2) {
  auto vecs = highest_weight_basis(n, j2);
  for (int cur = j2; cur > m2; cur -= 2) {
    const auto down = uq_sminus(n, cur);
    for (auto& v : vecs) v = down.mat.apply(v);
  }
  return vecs;
}

std::vector<std::vector<Rational>> descents_probe(int n, int j2, int m2, const Rational& q) {
  auto vecs = highest_weight_basis_probe(n, j2, q);
  if (j2 == m2) return vecs;
  const auto down = divided_power_probe(-1, (j2 - m2) / 2, n, j2, q);
  for (auto& v : vecs) v = down.mat.apply(v);
  return vecs;
}

/// Shared driver for both verification modes; T is LaurentPoly (cleared denominators) or Rational.
template <class T>
struct FamilyData {
  std::vector<int> j2s;
  std::vector<Operator<T>> z;  // numerators (symbolic) or values (probe)
  T den;                       // common denominator, one at a probe
  std::vector<Operator<T>> gens;
  Operator<T> id;
  std::vector<std::vector<std::vector<T>>> desc;  // per j: descent vectors
};

template <class T>
void run_checks(const FamilyData<T>& f, int n, int m2, FamilyReport& rep, const std::string& where,
                std::vector<T> traces_expected_scaled, std::vector<std::string>& trace_text) {
  const std::size_t k = f.j2s.size();
  // products z_j z_j' for j <= j'; independent, so computed concurrently
  std::vector<std::vector<std::future<Operator<T>>>> prods(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b)
      prods[a].push_back(std::async(std::launch::async, [&f, a, b] { return f.z[a] * f.z[b]; }));

  for (std::size_t a = 0; a < k; ++a) {
    auto& res = rep.idempotents[a];
    std::string orth_fail;
    bool idem_ok = true;
    for (std::size_t b = a; b < k; ++b) {
      const Operator<T> p = prods[a][b - a].get();
      if (b == a) {
        idem_ok = p == f.z[a].scaled(f.den);
      } else if (!p.mat.is_zero()) {
        orth_fail += (orth_fail.empty() ? "" : ", ") + std::string("(j=") + half(f.j2s[a]) + ", j'=" + half(f.j2s[b]) + ")";
        for (auto& other : rep.idempotents)
          if (other.j2 == f.j2s[b]) other.checks.add("orthogonal_" + half(f.j2s[a]), false, "z_j z_j' != 0 " + where);
      }
    }
    res.checks.add("idempotent", idem_ok, idem_ok ? "" : "z^2 != z " + where);
    res.checks.add("orthogonal", orth_fail.empty(), orth_fail.empty() ? "" : "nonzero products " + orth_fail + " " + where);

    std::string comm_fail;
    for (std::size_t i = 0; i < f.gens.size(); ++i)
      if (!(f.z[a] * f.gens[i] == f.gens[i] * f.z[a])) comm_fail += " i=" + std::to_string(i + 1);
    res.checks.add("commutes", comm_fail.empty(), comm_fail.empty() ? "" : "fails for" + comm_fail + " " + where);

    const T tr = f.z[a].mat.trace();
    const bool tr_ok = tr == traces_expected_scaled[a];
    res.checks.add("trace", tr_ok, tr_ok ? "" : "trace " + trace_text[a] + " != Gamma " + where);

    std::string img_fail;
    for (std::size_t b = 0; b < k; ++b) {
      for (const auto& d : f.desc[b]) {
        const auto zd = f.z[a].mat.apply(d);
        const bool ok = b == a ? zd == scaled(d, f.den) : vec_zero(zd);
        if (!ok) {
          img_fail += " j'=" + half(f.j2s[b]);
          break;
        }
      }
    }
    if (f.desc[a].size() != rep.idempotents[a].expected_trace)
      img_fail += " (found " + std::to_string(f.desc[a].size()) + " highest-weight vectors)";
    res.checks.add("image", img_fail.empty(), img_fail.empty() ? "" : "wrong action on descents of" + img_fail + " " + where);
  }

  Operator<T> sum = f.id.scaled(T{});
  for (const auto& z : f.z) sum += z;
  const bool part = sum == f.id.scaled(f.den);
  rep.family_checks.add("partition_of_unity", part, part ? "" : "sum of z_j != identity " + where);
  (void)n;
  (void)m2;
}

}  // namespace

CycloProduct coeff_a_factored(int i, int j2, int m2) {
  require_weights(j2, m2);
  if (i < 0) throw std::invalid_argument("coeff_a: requires i >= 0");
  const int jm = (j2 - m2) / 2;
  if (i < jm) return CycloProduct::q_int(0);
  const int top = i + (j2 + m2) / 2 + 1;
  CycloProduct r = CycloProduct::q_binomial(i, jm);
  r /= CycloProduct::q_binomial(top, i + 1);
  r *= CycloProduct::q_int(j2 + 1);
  r /= CycloProduct::q_int(i + 1);
  if ((i + jm) % 2) r.negate();
  return r;
}

RatFunc coeff_a(int i, int j2, int m2) { return coeff_a_factored(i, j2, m2).to_ratfunc(); }

IdempotentCoeffs idempotent_coeffs(int n, int j2, int m2) {
  require_weights(j2, m2);
  if (j2 > n || (n - j2) % 2 != 0) throw std::invalid_argument("idempotent: requires j <= n/2 with matching parity");
  IdempotentCoeffs c{n, j2, m2, {}};
  for (int i = 0; i <= (n - m2) / 2; ++i) c.a.push_back(coeff_a(i, j2, m2));
  return c;
}

std::vector<int> admissible_j2(int n, int m2) {
  std::vector<int> out;
  for (int j2 = m2; j2 <= n; j2 += 2) out.push_back(j2);
  return out;
}

Operator<RatFunc> idempotent_z(int n, int j2, int m2) {
  const auto c = idempotent_coeffs(n, j2, m2);
  WeightSpace w(n, m2);
  Operator<RatFunc> z{n, m2, m2, SparseMatrix<RatFunc>(w.dim(), w.dim())};
  for (std::size_t i = static_cast<std::size_t>((j2 - m2) / 2); i < c.a.size(); ++i) {
    const auto s = s_r_shared(n, static_cast<int>(i), m2);
    z += s->map<RatFunc>([&](const LaurentPoly& x) { return RatFunc(x) * c.a[i]; });
  }
  return z;
}

Operator<Rational> idempotent_z_probe(int n, int j2, int m2, const Rational& q) {
  const auto c = idempotent_coeffs(n, j2, m2);
  WeightSpace w(n, m2);
  Operator<Rational> z{n, m2, m2, SparseMatrix<Rational>(w.dim(), w.dim())};
  for (std::size_t i = static_cast<std::size_t>((j2 - m2) / 2); i < c.a.size(); ++i)
    z += s_r_probe(n, static_cast<int>(i), m2, q).scaled(eval_q(c.a[i], q));
  return z;
}

ClearedFamily cleared_family(int n, int m2) {
  ClearedFamily fam;
  fam.n = n;
  fam.m2 = m2;
  fam.j2s = admissible_j2(n, m2);
  const int top = (n - m2) / 2;
  std::map<int, int> den_exp;
  std::vector<std::vector<CycloProduct>> coeffs;
  for (int j2 : fam.j2s) {
    coeffs.emplace_back();
    for (int i = 0; i <= top; ++i) {
      coeffs.back().push_back(coeff_a_factored(i, j2, m2));
      const auto& c = coeffs.back().back();
      if (c.is_zero()) continue;
      for (const auto& [d, e] : c.exponents())
        if (e < 0) den_exp[d] = std::max(den_exp[d], -e);
    }
  }
  fam.den = LaurentPoly(1);
  for (const auto& [d, e] : den_exp)
    for (int t = 0; t < e; ++t) fam.den *= cyclotomic_poly(d);
  const RatFunc den(fam.den);
  WeightSpace w(n, m2);
  for (std::size_t k = 0; k < fam.j2s.size(); ++k) {
    Operator<LaurentPoly> z{n, m2, m2, SparseMatrix<LaurentPoly>(w.dim(), w.dim())};
    for (int i = 0; i <= top; ++i) {
      if (coeffs[k][i].is_zero()) continue;
      const LaurentPoly c = (coeffs[k][i].to_ratfunc() * den).as_polynomial();
      z += s_r_shared(n, i, m2)->scaled(c);
    }
    fam.num.push_back(std::move(z));
  }
  return fam;
}

std::string to_string(VerifyMode mode) { return mode == VerifyMode::Symbolic ? "symbolic" : "probe"; }

std::vector<Rational> default_probes() { return {Rational(3, 2), Rational(7, 5)}; }

bool FamilyReport::ok() const {
  if (!family_checks.ok()) return false;
  for (const auto& r : idempotents)
    if (!r.checks.ok()) return false;
  return true;
}

FamilyReport verify_family(int n, int m2, VerifyMode mode, const std::vector<Rational>& probes) {
  if (n < 1) throw std::invalid_argument("verify_family: requires n >= 1");
  if (m2 < 0 || m2 > n || (n - m2) % 2 != 0) throw std::invalid_argument("verify_family: requires 0 <= m <= n/2 with matching parity");
  const int cap = desk_cap(mode == VerifyMode::Symbolic ? kSymbolicMaxN : kProbeMaxN);
  if (n > cap)
    throw std::invalid_argument("verify_family: n = " + std::to_string(n) + " exceeds the " + to_string(mode) + " cap of " +
                                std::to_string(cap));
  if (probes.empty()) throw std::invalid_argument("verify_family: at least one probe is required");

  FamilyReport rep;
  rep.n = n;
  rep.m2 = m2;
  rep.mode = mode;
  rep.probes = probes;
  const auto j2s = admissible_j2(n, m2);
  for (int j2 : j2s) {
    IdempotentResult r;
    r.j2 = j2;
    r.expected_trace = gamma_multiplicity(n, j2);
    rep.idempotents.push_back(std::move(r));
  }

  if (mode == VerifyMode::Symbolic) {
    const ClearedFamily fam = cleared_family(n, m2);
    FamilyData<LaurentPoly> f;
    f.j2s = j2s;
    f.z = fam.num;
    f.den = fam.den;
    for (int i = 1; i < n; ++i) f.gens.push_back(tl_generator(n, i, m2));
    f.id = identity_operator(n, m2);
    std::vector<LaurentPoly> expect;
    std::vector<std::string> text;
    for (std::size_t k = 0; k < j2s.size(); ++k) {
      f.desc.push_back(descents(n, j2s[k], m2));
      expect.push_back(fam.den * LaurentPoly(Rational(static_cast<long long>(rep.idempotents[k].expected_trace))));
      text.push_back(RatFunc(fam.num[k].mat.trace(), fam.den).to_string("v"));
      rep.idempotents[k].trace = text.back();
    }
    run_checks(f, n, m2, rep, "over Q(q)", expect, text);
  } else {
    for (const Rational& q : probes) {
      FamilyData<Rational> f;
      f.j2s = j2s;
      // one integer scale clears every denominator, which keeps the products in integer arithmetic
      mpz_class scale = 1;
      for (int j2 : j2s) {
        f.z.push_back(idempotent_z_probe(n, j2, m2, q));
        for (const auto& row : f.z.back().mat.data())
          for (const auto& [c, x] : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.to_mpq().get_den_mpz_t());
      }
      f.den = Rational(scale);
      for (auto& z : f.z) z = z.scaled(f.den);
      for (int i = 1; i < n; ++i) f.gens.push_back(to_probe(tl_generator(n, i, m2), q));
      f.id = identity_operator(ProbeScalars(q), n, m2);
      std::vector<Rational> expect;
      std::vector<std::string> text;
      for (std::size_t k = 0; k < j2s.size(); ++k) {
        f.desc.push_back(descents_probe(n, j2s[k], m2, q));
        expect.push_back(f.den * Rational(static_cast<long long>(rep.idempotents[k].expected_trace)));
        text.push_back((f.z[k].mat.trace() / f.den).to_string());
        if (&q == &probes.front()) rep.idempotents[k].trace = text.back();
      }
      run_checks(f, n, m2, rep, "at q=" + q.to_string(), expect, text);
    }
  }

  const auto dims = commutant_dimension(n, m2, probes);
  bool dim_ok = true;
  std::string detail;
  for (int d : dims) {
    if (d != static_cast<int>(j2s.size())) dim_ok = false;
    detail += (detail.empty() ? "" : ",") + std::to_string(d);
  }
  rep.commutant_dim = dims.empty() ? -1 : dims.front();
  rep.family_checks.add("commutant_dimension", dim_ok,
                        "commutant dims " + detail + " vs " + std::to_string(j2s.size()) + " idempotents");
  return rep;
}

RecursionReport recursion_check(int n, int j2, int m2) {
  require_weights(j2, m2);
  if (j2 > n - 2) throw std::invalid_argument("recursion_check: requires j <= n/2 - 1");
  RecursionReport rep;
  const int top = (n - m2) / 2;
  const int half_sum = (n + m2) / 2;
  RatFunc acc;
  for (int i = 0; i < top; ++i)
    acc += RatFunc(q_binomial(half_sum + i, i) * q_binomial(top, i)) * coeff_a(i, j2, m2);
  rep.from_recursion = -acc / RatFunc(q_binomial(n, top));
  rep.closed_form = coeff_a(top, j2, m2);

  const auto big = idempotent_coeffs(n, j2, m2);
  const auto small = idempotent_coeffs(n - 2, j2, m2);
  rep.coefficients_ok = big.a.size() == small.a.size() + 1;
  for (std::size_t i = 0; rep.coefficients_ok && i < small.a.size(); ++i) rep.coefficients_ok = big.a[i] == small.a[i];
  rep.coefficients_ok = rep.coefficients_ok && big.a.back() == rep.from_recursion;

  // descent of |++...+> to W_m
  WeightSpace full(n, n);
  std::vector<LaurentPoly> v(full.dim(), LaurentPoly(1));
  for (int cur = n; cur > m2; cur -= 2) v = uq_sminus(n, cur).mat.apply(v);
  std::vector<RatFunc> vr(v.begin(), v.end());
  rep.kills_top = vec_zero(idempotent_z(n, j2, m2).mat.apply(vr));

  rep.ok = rep.from_recursion == rep.closed_form && rep.coefficients_ok && rep.kills_top;
  return rep;
}

RatFunc casimir_relation_scalar(int j2) { return RatFunc(q_int(2 * (j2 + 1))) / RatFunc(q_int(j2 + 1)); }

CasimirRelationReport casimir_relation_check(int n) {
  CasimirRelationReport rep;
  for (int m2 = n % 2; m2 <= n; m2 += 2) {
    const auto fam = cleared_family(n, m2);
    const auto c = casimir_central(n, m2);
    for (std::size_t k = 0; k < fam.j2s.size(); ++k) {
      const int j2 = fam.j2s[k];
      // C z = ([2(2j+1)]/[2j+1]) z, multiplied through by [2j+1]
      const bool ok = (c * fam.num[k]).scaled(q_int(j2 + 1)) == fam.num[k].scaled(q_int(2 * (j2 + 1)));
      rep.checks.add("m=" + half(m2) + " j=" + half(j2), ok, ok ? "" : "not the expected scalar");
    }
  }
  std::vector<RatFunc> scalars;
  for (int j2 = n % 2; j2 <= n; j2 += 2) scalars.push_back(casimir_relation_scalar(j2));
  bool distinct = true;
  for (std::size_t a = 0; a < scalars.size(); ++a)
    for (std::size_t b = a + 1; b < scalars.size(); ++b)
      if (scalars[a] == scalars[b]) distinct = false;
  rep.checks.add("distinct_scalars", distinct, distinct ? "" : "two weights share a scalar");
  rep.ok = rep.checks.ok();
  return rep;
}

CheckList module_identification_check(int n, int m2, const std::vector<Rational>& probes) {
  require_weights(m2, m2);
  if (m2 > n || (n - m2) % 2 != 0) throw std::invalid_argument("module_identification_check: bad weight");
  CheckList out;
  const int ell = (n - m2) / 2;
  const auto patterns = link_basis(n, ell);
  std::vector<std::vector<LaurentPoly>> images;
  for (const auto& w : patterns) images.push_back(psi(w));

  const auto fam = cleared_family(n, m2);
  for (std::size_t k = 0; k < fam.j2s.size(); ++k) {
    if (fam.j2s[k] == m2) continue;
    bool zero = true;
    for (const auto& v : images) zero = zero && vec_zero(fam.num[k].mat.apply(v));
    out.add("kills_psi_j=" + half(fam.j2s[k]), zero, zero ? "" : "z_{j',m} psi != 0");
  }
  for (const Rational& q : probes) {
    const auto z = idempotent_z_probe(n, m2, m2, q);
    DenseMatrix<Rational> rows;
    for (const auto& v : images) {
      std::vector<Rational> r(v.size());
      for (std::size_t t = 0; t < v.size(); ++t)
        if (!v[t].is_zero()) r[t] = eval_q(v[t].shifted(ell % 2 ? -1 : 0), q);
      rows.push_back(z.mat.apply(r));
    }
    const std::size_t rank = rows.empty() ? 0 : rank_of(rows, rows[0].size(), Rational(1));
    const bool ok = rank == patterns.size();
    out.add("full_rank_q=" + q.to_string(), ok,
            "rank " + std::to_string(rank) + " of " + std::to_string(patterns.size()));
  }
  return out;
}

}  // namespace tlq
