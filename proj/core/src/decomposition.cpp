#include <algorithm>
#include <map>
#include <stdexcept>

#include "tlq/rootlimit.hpp"

namespace tlq {

namespace {

std::string half(int x2) { return x2 % 2 ? std::to_string(x2) + "/2" : std::to_string(x2 / 2); }

bool odd(int x) { return x % 2 != 0; }

std::vector<int> all_j2(int n) {
  std::vector<int> out;
  for (int j2 = n % 2; j2 <= n; j2 += 2) out.push_back(j2);
  return out;
}

void sort_entries(std::vector<ModuleEntry>& v) {
  std::sort(v.begin(), v.end(), [](const ModuleEntry& x, const ModuleEntry& y) {
    if (x.j2 != y.j2) return x.j2 < y.j2;
    return x.kind == ModuleKind::P && y.kind == ModuleKind::V;
  });
}

unsigned long long dim_p(int n, int j2, int lower_j2) {
  return gamma_multiplicity(n, j2) + (lower_j2 >= 0 ? gamma_multiplicity(n, lower_j2) : 0);
}

std::string describe(const std::vector<ModuleEntry>& v) {
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : " ") + std::to_string(e.multiplicity) + "x" + module_label(e);
  return s;
}

}  // namespace

std::string module_label(const ModuleEntry& e) {
  return std::string(e.kind == ModuleKind::P ? "P" : "V") + "_" + half(e.j2);
}

std::vector<int> orbit_of(int n, int j2, int p) {
  if (j2 < 0 || j2 > n || (n - j2) % 2 != 0) throw std::invalid_argument("orbit_of: j out of range");
  if (is_critical(j2, p)) return {j2};
  std::vector<int> out;
  for (int k2 : all_j2(n)) {
    if ((k2 - j2) % (2 * p) == 0 || (k2 + j2 + 2) % (2 * p) == 0) out.push_back(k2);
  }
  return out;
}

std::vector<ModuleEntry> weight_space_blocks(int n, int m2, const std::optional<RootSpec>& root) {
  m2 = std::abs(m2);
  if (m2 > n || (n - m2) % 2 != 0) throw std::invalid_argument("weight_space_blocks: invalid weight");
  std::vector<ModuleEntry> out;
  if (!root) {
    for (int j2 = m2; j2 <= n; j2 += 2) out.push_back({ModuleKind::V, j2, 1, gamma_multiplicity(n, j2)});
    return out;
  }
  const PairClassification pc = bound_pairs(n, m2, root->p);
  for (const auto& [a, b] : pc.pairs) out.push_back({ModuleKind::P, b, 1, dim_p(n, b, a)});
  for (int j2 : pc.critical) out.push_back({ModuleKind::V, j2, 1, gamma_multiplicity(n, j2)});
  for (int j2 : pc.unbound) out.push_back({ModuleKind::V, j2, 1, gamma_multiplicity(n, j2)});
  sort_entries(out);
  return out;
}

std::vector<ModuleEntry> multiplicities_windowed(int n, int p) {
  if (n < 1 || p < 2) throw std::invalid_argument("multiplicities_windowed: requires n >= 1, p >= 2");
  const int rm = (n + 1) / p;
  const int sm = n - rm * p;
  std::map<std::pair<int, int>, ModuleEntry> acc;
  auto put = [&](ModuleKind kind, int j2, long long mult) {
    if (mult == 0) return;
    if (j2 < 0 || j2 > n || (n - j2) % 2 != 0) throw std::logic_error("multiplicities_windowed: weight out of range");
    auto& e = acc[{j2, kind == ModuleKind::P ? 0 : 1}];
    e.kind = kind;
    e.j2 = j2;
    e.multiplicity += mult;
  };
  for (int r = 1; r <= rm - 1; ++r)
    for (int s = 0; s <= p - 1; ++s)
      if (odd(r * p + s + n)) put(ModuleKind::P, r * p + s - 1, static_cast<long long>(r) * (p - s));
  for (int s = 0; s <= sm + 1; ++s)
    if (odd(s + sm)) put(ModuleKind::P, rm * p + s - 1, static_cast<long long>(rm) * (p - s));
  for (int s = 1; s <= sm + 1; ++s)
    if (odd(s + sm)) put(ModuleKind::V, rm * p + s - 1, static_cast<long long>(rm + 1) * s);
  for (int s = sm + 2; s <= p - 1; ++s)
    if (odd(s + sm)) put(ModuleKind::V, rm * p - s - 1, static_cast<long long>(rm) * (p - s));

  std::vector<ModuleEntry> out;
  for (auto& [key, e] : acc) {
    if (e.kind == ModuleKind::V || is_critical(e.j2, p)) {
      e.dimension = gamma_multiplicity(n, e.j2);
    } else {
      const std::vector<int> orb = orbit_of(n, e.j2, p);
      auto it = std::find(orb.begin(), orb.end(), e.j2);
      e.dimension = dim_p(n, e.j2, it == orb.begin() ? -1 : *(it - 1));
    }
    out.push_back(e);
  }
  sort_entries(out);
  return out;
}

DecompositionReport multiplicities(int n, const std::optional<RootSpec>& root) {
  if (n < 1 || n > 62) throw std::invalid_argument("multiplicities: n must satisfy 1 <= n <= 62");
  DecompositionReport rep;
  rep.n = n;
  rep.root = root;

  if (!root) {
    for (int j2 : all_j2(n)) rep.entries.push_back({ModuleKind::V, j2, j2 + 1, gamma_multiplicity(n, j2)});
  } else {
    const int p = root->p;
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    bool closed_ok = true;
    std::string closed_detail;
    for (int j2 : all_j2(n)) {
      if (seen[static_cast<std::size_t>(j2)]) continue;
      const std::vector<int> orb = orbit_of(n, j2, p);
      for (int k2 : orb) seen[static_cast<std::size_t>(k2)] = true;
      if (is_critical(j2, p)) {
        rep.entries.push_back({ModuleKind::P, j2, j2 + 1, gamma_multiplicity(n, j2)});
        continue;
      }
      // #p_{j_2} = 2 j_1 + 1,  #p_{j_{i+1}} = (2 j_i + 1) - #p_{j_i}
      long long prev = 0;
      for (std::size_t i = 1; i < orb.size(); ++i) {
        const long long cur = (orb[i - 1] + 1) - prev;
        const long long idx = static_cast<long long>(i) + 1;
        const long long closed = (idx - 1) * (idx * p - orb[i] - 1);
        if (cur != closed) {
          closed_ok = false;
          closed_detail += " P_" + half(orb[i]);
        }
        if (cur != 0) rep.entries.push_back({ModuleKind::P, orb[i], cur, dim_p(n, orb[i], orb[i - 1])});
        prev = cur;
      }
      const long long l = static_cast<long long>(orb.size());
      const long long v = (orb.back() + 1) - prev;
      const long long v_closed = l * (orb.back() + 1 - (l - 1) * p);
      if (v != v_closed) {
        closed_ok = false;
        closed_detail += " V_" + half(orb.back());
      }
      if (v != 0) rep.entries.push_back({ModuleKind::V, orb.back(), v, gamma_multiplicity(n, orb.back())});
    }
    sort_entries(rep.entries);
    rep.checks.add("closed_form", closed_ok, closed_ok ? "" : "recursion differs from closed form at" + closed_detail);

    const std::vector<ModuleEntry> win = multiplicities_windowed(n, p);
    rep.checks.add("windowed_form", win == rep.entries, win == rep.entries ? "" : "window form gives " + describe(win));
  }

  // summing the blocks of every W_m, with critical V_j read as P_j
  std::map<std::pair<int, int>, ModuleEntry> acc;
  for (int m2 = -n; m2 <= n; m2 += 2) {
    for (ModuleEntry e : weight_space_blocks(n, m2, root)) {
      if (root && is_critical(e.j2, root->p)) e.kind = ModuleKind::P;
      auto& a = acc[{e.j2, e.kind == ModuleKind::P ? 0 : 1}];
      if (a.multiplicity == 0) a = e;
      else a.multiplicity += 1;
    }
  }
  std::vector<ModuleEntry> blocks;
  for (const auto& [key, e] : acc) blocks.push_back(e);
  sort_entries(blocks);
  rep.checks.add("weight_space_blocks", blocks == rep.entries,
                 blocks == rep.entries ? "" : "weight spaces give " + describe(blocks));

  for (const auto& e : rep.entries) rep.total += static_cast<unsigned long long>(e.multiplicity) * e.dimension;
  const unsigned long long want = 1ULL << n;
  rep.checks.add("dimension_audit", rep.total == want, std::to_string(rep.total) + " vs 2^" + std::to_string(n));
  return rep;
}

}  // namespace tlq
