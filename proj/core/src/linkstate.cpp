#include "tlq/linkstate.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tlq/linalg.hpp"
#include "tlq/qnum.hpp"
#include "tlq/spin_basis.hpp"
#include "tlq/spinrep.hpp"

namespace tlq {

int LinkPattern::arcs() const {
  int c = 0;
  for (int k = 0; k < n(); ++k)
    if (partner[k] > k + 1) ++c;
  return c;
}

std::vector<std::pair<int, int>> LinkPattern::arc_list() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < n(); ++k)
    if (partner[k] > k + 1) out.emplace_back(k + 1, partner[k]);
  return out;
}

std::vector<int> LinkPattern::defects() const {
  std::vector<int> out;
  for (int k = 0; k < n(); ++k)
    if (partner[k] == 0) out.push_back(k + 1);
  return out;
}

bool LinkPattern::valid() const {
  std::vector<int> stack;
  for (int s = 1; s <= n(); ++s) {
    const int p = partner[s - 1];
    if (p == 0) {
      if (!stack.empty()) return false;
    } else if (p < 1 || p > n() || p == s || partner[p - 1] != s) {
      return false;
    } else if (p > s) {
      stack.push_back(s);
    } else {
      if (stack.empty() || stack.back() != p) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

std::string LinkPattern::to_string() const {
  std::string out;
  for (int k = 0; k < n(); ++k) out += partner[k] == 0 ? '|' : (partner[k] > k + 1 ? '(' : ')');
  return out;
}

namespace {

void enumerate(int n, int ell, int site, int open_arcs, int used_arcs, std::vector<int>& stack, LinkPattern& cur,
               std::vector<LinkPattern>& out) {
  if (site > n) {
    if (stack.empty() && used_arcs == ell) out.push_back(cur);
    return;
  }
  const int remaining = n - site + 1;
  // defect: only outside every arc
  if (stack.empty()) {
    cur.partner[site - 1] = 0;
    enumerate(n, ell, site + 1, open_arcs, used_arcs, stack, cur, out);
  }
  // close the innermost open arc
  if (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    cur.partner[site - 1] = a;
    cur.partner[a - 1] = site;
    enumerate(n, ell, site + 1, open_arcs - 1, used_arcs, stack, cur, out);
    cur.partner[a - 1] = 0;
    stack.push_back(a);
  }
  // open a new arc
  if (used_arcs < ell && remaining > static_cast<int>(stack.size())) {
    stack.push_back(site);
    enumerate(n, ell, site + 1, open_arcs + 1, used_arcs + 1, stack, cur, out);
    stack.pop_back();
  }
  cur.partner[site - 1] = 0;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<LinkPattern> link_basis(int n, int ell) {
  if (n < 0 || ell < 0 || 2 * ell > n) throw std::invalid_argument("link_basis: requires 0 <= ell <= n/2");
  std::vector<LinkPattern> out;
  LinkPattern cur{std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::vector<int> stack;
  enumerate(n, ell, 1, 0, 0, stack, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long link_count(int n, int ell) { return binom_u64(n, ell) - binom_u64(n, ell - 1); }

LinkAction act_e(int i, const LinkPattern& w) {
  const int n = w.n();
  if (i < 1 || i >= n) throw std::invalid_argument("act_e: requires 1 <= i < n");
  // nodes 0..n-1: top endpoints of e_i, n..2n-1: pattern sites (bottom of e_i)
  UnionFind uf(2 * n);
  for (int k = 1; k <= n; ++k) {
    if (k == i || k == i + 1) continue;
    uf.join(k - 1, n + k - 1);
  }
  uf.join(i - 1, i);
  uf.join(n + i - 1, n + i);
  for (auto [a, b] : w.arc_list()) uf.join(n + a - 1, n + b - 1);

  std::vector<std::vector<int>> tops(2 * n);
  std::vector<int> defect_count(2 * n, 0);
  std::vector<char> touched(2 * n, 0);
  for (int k = 0; k < n; ++k) tops[uf.find(k)].push_back(k + 1);
  for (int d : w.defects()) ++defect_count[uf.find(n + d - 1)];

  LinkAction out;
  out.result.partner.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < 2 * n; ++x) {
    const int r = uf.find(x);
    if (touched[r]) continue;
    touched[r] = 1;
    const auto& t = tops[r];
    const int d = defect_count[r];
    if (t.empty() && d == 0) {
      ++out.loops;
    } else if (d >= 2) {
      out.zero = true;  // two defects joined: too many arcs
      return out;
    } else if (t.size() == 2 && d == 0) {
      out.result.partner[t[0] - 1] = t[1];
      out.result.partner[t[1] - 1] = t[0];
    } else if (t.size() == 1 && d == 1) {
      out.result.partner[t[0] - 1] = 0;
    } else {
      throw std::logic_error("act_e: malformed connectivity");
    }
  }
  return out;
}

LinkCombination act_e(int i, const LinkCombination& v) {
  LinkCombination out;
  const RatFunc beta(q_int(2));
  for (const auto& [w, c] : v) {
    const LinkAction a = act_e(i, w);
    if (a.zero) continue;
    RatFunc s = c;
    for (int k = 0; k < a.loops; ++k) s *= beta;
    auto& slot = out[a.result];
    slot += s;
    if (slot.is_zero()) out.erase(a.result);
  }
  return out;
}

std::vector<LaurentPoly> psi(const LinkPattern& w) {
  const int n = w.n();
  const int m2 = n - 2 * w.arcs();
  WeightSpace space(n, m2);
  // expand the product of T(i, j) = (-1)^{i+1} (q^{-1/2} sigma_j^- - q^{1/2} sigma_i^-) acting on |++...+>
  std::map<std::uint32_t, LaurentPoly> terms{{0u, LaurentPoly(1)}};
  for (auto [a, b] : w.arc_list()) {
    std::map<std::uint32_t, LaurentPoly> next;
    const Rational sign(a % 2 ? 1 : -1);
    for (const auto& [s, c] : terms) {
      next[s | space.site_bit(b)] += c * LaurentPoly::monomial(-1, sign);
      next[s | space.site_bit(a)] -= c * LaurentPoly::monomial(1, sign);
    }
    terms.swap(next);
  }
  std::vector<LaurentPoly> out(space.dim());
  for (const auto& [s, c] : terms) {
    if (c.is_zero()) continue;
    out[static_cast<std::size_t>(space.index_of(s))] = c;
  }
  return out;
}

std::vector<RatFunc> psi(int n, const LinkCombination& v) {
  std::vector<RatFunc> out;
  for (const auto& [w, c] : v) {
    if (w.n() != n) throw std::invalid_argument("psi: pattern size mismatch");
    const auto img = psi(w);
    if (out.empty()) out.assign(img.size(), RatFunc(0));
    if (img.size() != out.size()) throw std::invalid_argument("psi: mixed arc counts in combination");
    for (std::size_t k = 0; k < img.size(); ++k)
      if (!img[k].is_zero()) out[k] += c * RatFunc(img[k]);
  }
  return out;
}

PsiReport verify_psi_homomorphism(int n, int ell) {
  PsiReport rep;
  const int m2 = n - 2 * ell;
  const auto basis = link_basis(n, ell);
  const LaurentPoly beta = q_int(2);
  for (int i = 1; i < n; ++i) {
    const auto e = tl_generator(n, i, m2);
    for (const auto& w : basis) {
      ++rep.checks;
      const auto lhs = e.mat.apply(psi(w));
      std::vector<LaurentPoly> rhs(lhs.size());
      const LinkAction a = act_e(i, w);
      if (!a.zero) {
        rhs = psi(a.result);
        LaurentPoly s(1);
        for (int k = 0; k < a.loops; ++k) s *= beta;
        for (auto& x : rhs) x *= s;
      }
      if (lhs != rhs) {
        std::ostringstream os;
        os << "e_" << i << " on " << w.to_string() << " differs";
        rep.ok = false;
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

int psi_image_rank(int n, int ell, const Rational& q) {
  const auto basis = link_basis(n, ell);
  DenseMatrix<Rational> rows;
  for (const auto& w : basis) {
    const auto img = psi(w);
    std::vector<Rational> r(img.size());
    for (std::size_t k = 0; k < img.size(); ++k) {
      // every coefficient carries the parity of ell in its v-exponent
      if (!img[k].is_zero()) r[k] = eval_q(img[k].shifted(ell % 2 ? -1 : 0), q);
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return 0;
  return static_cast<int>(rank_of(rows, rows[0].size(), Rational(1)));
}

std::vector<std::vector<LaurentPoly>> standard_module_matrix(int n, int ell, int i) {
  const auto basis = link_basis(n, ell);
  std::map<LinkPattern, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  std::vector<std::vector<LaurentPoly>> mat(basis.size(), std::vector<LaurentPoly>(basis.size()));
  const LaurentPoly beta = q_int(2);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const LinkAction a = act_e(i, basis[c]);
    if (a.zero) continue;
    LaurentPoly s(1);
    for (int k = 0; k < a.loops; ++k) s *= beta;
    mat[index.at(a.result)][c] += s;
  }
  return mat;
}

}  // namespace tlq
