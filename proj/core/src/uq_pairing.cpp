#include "tlq/uq_pairing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "tlq/qnum.hpp"
#include "tlq/rootlimit.hpp"
#include "tlq/spinrep.hpp"

namespace tlq {

namespace {

using Vec = std::vector<CycloNumber>;

std::string half(int x2) { return x2 % 2 ? std::to_string(x2) + "/2" : std::to_string(x2 / 2); }

/// Ladders and divided powers of S^- at the root, built lazily.
class RootLadders {
 public:
  RootLadders(int n, const RootSpec& root) : n_(n), root_(root), ring_(root) {}

  const CycloScalars& ring() const { return ring_; }

  const Operator<CycloNumber>& splus(int m2) {
    auto it = splus_.find(m2);
    if (it == splus_.end()) it = splus_.emplace(m2, uq_splus(ring_, n_, m2)).first;
    return it->second;
  }
  const Operator<CycloNumber>& sminus(int m2) {
    auto it = sminus_.find(m2);
    if (it == sminus_.end()) it = sminus_.emplace(m2, uq_sminus(ring_, n_, m2)).first;
    return it->second;
  }

  /// (S^-)^{(r)} : W_{from} -> W_{from - 2r}
  const Operator<CycloNumber>& lower(int from_m2, int r) {
    auto& chain = chains_[from_m2];
    if (chain.laurent.empty()) {
      chain.laurent.push_back(identity_operator(n_, from_m2));
      chain.cyclo.push_back(to_cyclo(chain.laurent.back(), root_));
    }
    while (static_cast<int>(chain.laurent.size()) <= r) {
      const int k = static_cast<int>(chain.laurent.size());
      const int cur = from_m2 - 2 * (k - 1);
      const LaurentPoly qk = q_int(k);
      Operator<LaurentPoly> next = (uq_sminus(n_, cur) * chain.laurent.back()).map<LaurentPoly>([&](const LaurentPoly& x) {
        LaurentPoly quo;
        if (!LaurentPoly::try_div(x, qk, quo)) throw std::logic_error("uq_pair_decompose: divided power is not integral");
        return quo;
      });
      chain.cyclo.push_back(to_cyclo(next, root_));
      chain.laurent.push_back(std::move(next));
    }
    return chain.cyclo[static_cast<std::size_t>(r)];
  }

 private:
  struct Chain {
    std::deque<Operator<LaurentPoly>> laurent;
    std::deque<Operator<CycloNumber>> cyclo;
  };
  int n_;
  RootSpec root_;
  CycloScalars ring_;
  std::map<int, Operator<CycloNumber>> splus_, sminus_;
  std::map<int, Chain> chains_;
};

Vec axpy(const CycloNumber& a, const Vec& x, const CycloNumber& b, const Vec& y) {
  Vec out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = a * x[k] + b * y[k];
  return out;
}

bool same(const Vec& a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] - b[k]).is_zero()) return false;
  return true;
}

/// A tower |top, m> = (S^-)^{(top - m)} v for m = top, top - 1, ..., -top; index by (top - m).
std::vector<Vec> tower(RootLadders& lad, int top2, const Vec& v) {
  std::vector<Vec> out;
  for (int r = 0; r <= top2; ++r) out.push_back(lad.lower(top2, r).mat.apply(v));
  return out;
}

std::vector<Vec> highest_weight_vectors(RootLadders& lad, int n, int j2) {
  const WeightSpace w(n, j2);
  const CycloNumber one = lad.ring().one();
  if (!WeightSpace::valid(n, j2 + 2)) {
    Vec e(w.dim(), one - one);
    e[0] = one;
    return {e};
  }
  const auto& sp = lad.splus(j2);
  auto ker = kernel_basis(to_dense(sp.mat), sp.cols(), one);
  for (auto& v : ker)
    for (auto& x : v)
      if (x.field() == nullptr) x = one - one;
  return ker;
}

struct Checker {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    ok = false;
  }
};

/// S^+|j,m> = [j+m+1]|j,m+1> and S^-|j,m> = [j-m+1]|j,m-1> along a tower.
void check_tower(RootLadders& lad, const RootSpec& root, int j2, const std::vector<Vec>& t, Checker& ck,
                 const std::string& name) {
  const CycloNumber zero = lad.ring().one() - lad.ring().one();
  for (std::size_t r = 0; r < t.size(); ++r) {
    const int m2 = j2 - 2 * static_cast<int>(r);
    if (r > 0) {
      const CycloNumber c = eval_at_root(q_int((j2 + m2) / 2 + 1), root);
      if (!same(lad.splus(m2).mat.apply(t[r]), axpy(c, t[r - 1], zero, t[r - 1]))) ck.fail(name + " S+ at m=" + half(m2));
    }
    if (r + 1 < t.size()) {
      const CycloNumber c = eval_at_root(q_int((j2 - m2) / 2 + 1), root);
      if (!same(lad.sminus(m2).mat.apply(t[r]), axpy(c, t[r + 1], zero, t[r + 1]))) ck.fail(name + " S- at m=" + half(m2));
    }
  }
}

}  // namespace

std::string uq_module_label(const UqModuleCount& m) {
  switch (m.kind) {
    case UqModuleKind::Paired: return "U_{" + half(m.j2) + "," + half(m.partner_j2) + "}";
    case UqModuleKind::Unpaired: return "U_" + half(m.j2);
    case UqModuleKind::Critical: return "M_" + half(m.j2);
  }
  return "?";
}

long long omega_count(int n, const std::vector<int>& orbit_j2, std::size_t i) {
  long long s = 0;
  for (std::size_t t = i; t < orbit_j2.size(); ++t) {
    const long long g = static_cast<long long>(gamma_multiplicity(n, orbit_j2[t]));
    s += (t - i) % 2 ? -g : g;
  }
  return s;
}

UqDecompositionReport uq_pair_decompose(int n, const RootSpec& root, bool span_check) {
  if (n < 1 || n > desk_cap(kUqPairingMaxN))
    throw std::invalid_argument("uq_pair_decompose: n must satisfy 1 <= n <= " + std::to_string(desk_cap(kUqPairingMaxN)));
  UqDecompositionReport rep;
  rep.n = n;
  rep.root = root;
  RootLadders lad(n, root);
  const CycloNumber one = lad.ring().one();
  const CycloNumber zero = one - one;

  // every tower vector, by weight, for the span check
  std::map<int, std::vector<Vec>> by_weight;
  auto record = [&](int top2, const std::vector<Vec>& t) {
    for (std::size_t r = 0; r < t.size(); ++r) by_weight[top2 - 2 * static_cast<int>(r)].push_back(t[r]);
  };

  Checker actions, counts, pairing;
  std::vector<UqModuleCount> paired, unpaired, critical;

  // weights are processed from the top so that every tower through W_j is known before W_j is searched
  std::map<std::pair<int, int>, long long> paired_count;
  std::map<int, long long> unpaired_count, critical_count;
  for (int top2 = n; top2 >= 0; top2 -= 2) {
    const std::vector<int> orb = orbit_of(n, top2, root.p);
    const std::size_t idx = static_cast<std::size_t>(std::find(orb.begin(), orb.end(), top2) - orb.begin());
    const bool crit = is_critical(top2, root.p);
    const bool has_partner = !crit && idx > 0;
    const int low2 = has_partner ? orb[idx - 1] : -1;
    const std::string name = crit ? "M_" + half(top2)
                             : has_partner ? "U_{" + half(top2) + "," + half(low2) + "}"
                                           : "U_" + half(top2);
    const std::size_t r_above = static_cast<std::size_t>((top2 - low2 - 2) / 2);
    const std::size_t r_bottom = static_cast<std::size_t>((top2 + low2 + 2) / 2);
    // S^- |j', -j'> = qbin(j+j'-1, 2j') [j+j']/[j-j'] |j, -j'-1>
    const int jj = (top2 + low2) / 2;
    const int jd = (top2 - low2) / 2;
    CycloNumber c_bottom = zero;
    DenseMatrix<CycloNumber> a;  // w solves S^+ w = |j, j'+1> together with the bottom relation
    if (has_partner) {
      c_bottom = eval_at_root(q_binomial(jj - 1, low2), root) * eval_at_root(q_int(jj), root) / eval_at_root(q_int(jd), root);
      a = to_dense(lad.splus(low2).mat);
      for (auto& row : to_dense((lad.sminus(-low2) * lad.lower(low2, low2)).mat)) a.push_back(std::move(row));
    }

    std::vector<Vec> ker = highest_weight_vectors(lad, n, top2);
    const std::size_t ker_dim = ker.size();
    if (has_partner && !ker.empty()) {
      // keep the highest-weight vectors v for which a partner exists: kernel of [a | -(L v, c L' v)]
      const Operator<CycloNumber>& up = lad.lower(top2, static_cast<int>(r_above));
      const Operator<CycloNumber>& down = lad.lower(top2, static_cast<int>(r_bottom));
      DenseMatrix<CycloNumber> joint = a;
      for (const Vec& v : ker) {
        Vec col = up.mat.apply(v);
        for (const auto& x : down.mat.apply(v)) col.push_back(c_bottom * x);
        for (std::size_t r = 0; r < joint.size(); ++r) joint[r].push_back(-col[r]);
      }
      const std::size_t wdim = a.empty() ? 0 : a[0].size();
      std::vector<Vec> admissible;
      for (const Vec& sol : kernel_basis(joint, wdim + ker.size(), one)) {
        Vec v(ker[0].size(), zero);
        for (std::size_t k = 0; k < ker.size(); ++k)
          if (!scalar_is_zero(sol[wdim + k]))
            for (std::size_t x = 0; x < v.size(); ++x) v[x] += sol[wdim + k] * ker[k][x];
        if (std::any_of(v.begin(), v.end(), [](const CycloNumber& x) { return !x.is_zero(); })) admissible.push_back(std::move(v));
      }
      ker = std::move(admissible);
    }
    SpanBuilder<CycloNumber> span(one);
    for (const Vec& v : by_weight[top2]) span.add(v);
    const std::size_t before = span.rank();
    std::vector<Vec> fresh;
    for (const Vec& v : ker)
      if (span.add(v)) fresh.push_back(v);

    const long long want = crit ? static_cast<long long>(gamma_multiplicity(n, top2)) : omega_count(n, orb, idx);
    if (static_cast<long long>(fresh.size()) != want) {
      counts.fail("j=" + half(top2) + ": kernel " + std::to_string(ker_dim) + " over " + std::to_string(before) +
                  " tower vectors, new " + std::to_string(fresh.size()) + ", expected " + std::to_string(want));
    }
    if (fresh.empty()) continue;

    if (!has_partner) {
      for (const Vec& v : fresh) {
        const auto t = tower(lad, top2, v);
        check_tower(lad, root, top2, t, actions, name);
        record(top2, t);
      }
      (crit ? critical_count : unpaired_count)[top2] += static_cast<long long>(fresh.size());
      continue;
    }

    for (const Vec& v : fresh) {
      const auto t = tower(lad, top2, v);
      Vec b = t[r_above];
      for (const auto& x : t[r_bottom]) b.push_back(c_bottom * x);
      auto w = solve_pivot_complement(a, b, one);
      if (!w) {
        pairing.fail(name + ": no partner");
        continue;
      }
      for (auto& x : *w)
        if (x.field() == nullptr) x = zero;
      const auto s = tower(lad, low2, *w);
      check_tower(lad, root, top2, t, actions, name + " upper");
      for (std::size_t r = 0; r + 1 < s.size(); ++r) {
        const int m2 = low2 - 2 * static_cast<int>(r);
        const CycloNumber c = eval_at_root(q_int((low2 - m2) / 2 + 1), root);
        if (!same(lad.sminus(m2).mat.apply(s[r]), axpy(c, s[r + 1], zero, s[r + 1])))
          actions.fail(name + " lower S- at m=" + half(m2));
      }
      // S^+ |j', m> = [j'+m+1] |j', m+1> + qbin(j-m-1, j'-m) |j, m+1>
      for (std::size_t r = 1; r < s.size(); ++r) {
        const int m2 = low2 - 2 * static_cast<int>(r);
        const CycloNumber c1 = eval_at_root(q_int((low2 + m2) / 2 + 1), root);
        const CycloNumber c2 = eval_at_root(q_binomial((top2 - m2) / 2 - 1, (low2 - m2) / 2), root);
        const Vec rhs = axpy(c1, s[r - 1], c2, t[static_cast<std::size_t>((top2 - m2 - 2) / 2)]);
        if (!same(lad.splus(m2).mat.apply(s[r]), rhs)) actions.fail(name + " lower S+ at m=" + half(m2));
      }
      if (!same(lad.splus(low2).mat.apply(s[0]), t[r_above])) actions.fail(name + " S+ on the partner");
      if (!same(lad.sminus(-low2).mat.apply(s.back()), axpy(c_bottom, t[r_bottom], zero, t[r_bottom])))
        actions.fail(name + " S- at the bottom");
      record(top2, t);
      record(low2, s);
    }
    paired_count[{top2, low2}] += static_cast<long long>(fresh.size());
  }
  for (const auto& [k, c] : paired_count)
    paired.push_back({UqModuleKind::Paired, k.first, k.second, c, static_cast<unsigned long long>(k.first + k.second + 2)});
  for (const auto& [j2, c] : unpaired_count)
    unpaired.push_back({UqModuleKind::Unpaired, j2, -1, c, static_cast<unsigned long long>(j2 + 1)});
  for (const auto& [j2, c] : critical_count)
    critical.push_back({UqModuleKind::Critical, j2, -1, c, static_cast<unsigned long long>(j2 + 1)});

  auto by_j_desc = [](const UqModuleCount& x, const UqModuleCount& y) { return x.j2 > y.j2; };
  std::sort(paired.begin(), paired.end(), by_j_desc);
  std::sort(unpaired.begin(), unpaired.end(), by_j_desc);
  std::sort(critical.begin(), critical.end(), by_j_desc);
  for (auto* part : {&paired, &unpaired, &critical})
    rep.modules.insert(rep.modules.end(), part->begin(), part->end());
  for (const auto& m : rep.modules) rep.total += static_cast<unsigned long long>(m.count) * m.dimension;

  rep.checks.add("pairing", pairing.ok, pairing.detail);
  rep.checks.add("omega_counts", counts.ok, counts.detail);
  rep.checks.add("tower_action", actions.ok, actions.detail);
  rep.checks.add("dimension_audit", rep.total == (1ULL << n), std::to_string(rep.total) + " vs 2^" + std::to_string(n));
  if (span_check) {
    Checker sp;
    for (int m2 = -n; m2 <= n; m2 += 2) {
      const auto& vs = by_weight[m2];
      const WeightSpace w(n, m2);
      SpanBuilder<CycloNumber> span(one);
      for (const Vec& v : vs) span.add(v);
      if (span.rank() != w.dim() || vs.size() != w.dim())
        sp.fail("m=" + half(m2) + ": " + std::to_string(vs.size()) + " vectors of rank " + std::to_string(span.rank()) +
                " in dimension " + std::to_string(w.dim()));
    }
    rep.checks.add("direct_sum", sp.ok, sp.detail);
  }
  return rep;
}

}  // namespace tlq
