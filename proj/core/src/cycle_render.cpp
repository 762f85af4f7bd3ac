#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tlq/render.hpp"
#include "tlq/spin_basis.hpp"

namespace tlq {

namespace {

std::string pad_left(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

std::string pad_right(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string label_text(const LabelTriple& t) {
  return std::to_string(t.a) + "," + std::to_string(t.d) + "," + std::to_string(t.g);
}

}  // namespace

std::string half_label(int x2) { return x2 % 2 ? std::to_string(x2) + "/2" : std::to_string(x2 / 2); }

std::string render_cycle_diagram(const CycleDiagram& d) {
  const std::size_t ncols = d.j2s.size();
  const std::size_t nrows = d.grid.size();

  std::size_t lw = 0;
  for (int j2 : d.j2s) lw = std::max(lw, half_label(j2).size());
  for (const auto& row : d.grid)
    for (const auto& c : row)
      if (!c.spurious) lw = std::max(lw, label_text(c.label).size());
  const std::size_t cell_w = lw + 3;

  // fences between columns; fence[c] sits left of column c
  std::vector<char> fence(ncols + 1, ' ');
  for (int jc = d.m2; ncols > 0 && jc <= d.j2s.back(); ++jc) {
    if (!is_critical(jc, d.p)) continue;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (d.j2s[c] == jc) fence[c] = fence[c + 1] = '|';
      if (c > 0 && d.j2s[c - 1] < jc && jc < d.j2s[c]) fence[c] = '|';
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, char> brackets;
  for (const auto& cy : d.cycles) {
    const auto i = static_cast<std::size_t>(cy.i);
    brackets[{i, static_cast<std::size_t>((cy.first_j2 - d.m2) / 2)}] |= 1;
    brackets[{i, static_cast<std::size_t>((cy.last_j2 - d.m2) / 2)}] |= 2;
  }

  const std::string row_head_blank = "     ";
  std::ostringstream out;
  out << "n=" << d.n << " m=" << half_label(d.m2) << " p=" << d.p << "\n";
  out << row_head_blank;
  for (std::size_t c = 0; c < ncols; ++c)
    out << fence[c] << ' ' << pad_right(half_label(d.j2s[c]), lw) << "  ";
  out << fence[ncols] << "\n";

  for (std::size_t i = 0; i < nrows; ++i) {
    out << "i=" << pad_left(std::to_string(i), 2) << ' ';
    for (std::size_t c = 0; c < ncols; ++c) {
      out << fence[c];
      const CycleCell& cell = d.grid[i][c];
      if (cell.spurious) {
        const std::size_t left = (cell_w - 1) / 2;
        out << std::string(left, ' ') << "•" << std::string(cell_w - 1 - left, ' ');
        continue;
      }
      auto it = brackets.find({i, c});
      const char b = it == brackets.end() ? 0 : it->second;
      out << ((b & 1) ? "‹" : " ") << pad_right(label_text(cell.label) + (cell.singular ? "!" : ""), lw + 1)
          << ((b & 2) ? "›" : " ");
    }
    out << fence[ncols] << "\n";
  }

  out << "critical:";
  if (d.critical_j2.empty()) out << " none";
  for (int j2 : d.critical_j2) out << ' ' << half_label(j2);
  out << "\nbound pairs:";
  if (d.bound_pairs.empty()) out << " none";
  for (const auto& [a, b] : d.bound_pairs) out << " (" << half_label(a) << "," << half_label(b) << ")";
  out << "\nsingular (i,j):";
  if (d.singular.empty()) out << " none";
  for (const auto& [i, j2] : d.singular) out << " (" << i << "," << half_label(j2) << ")";
  out << "\n";
  return out.str();
}

std::string render_bratteli(int n, std::optional<int> p) {
  if (n < 0 || n > 62) throw std::invalid_argument("render_bratteli: n must satisfy 0 <= n <= 62");
  if (p && *p < 2) throw std::invalid_argument("render_bratteli: p must be at least 2");

  std::size_t w = std::to_string(n).size();
  for (int j2 = n % 2; j2 <= n; j2 += 2) w = std::max(w, std::to_string(gamma_multiplicity(n, j2)).size());
  ++w;

  auto critical = [&](int j2) { return p && is_critical(j2, *p); };

  std::ostringstream out;
  out << "n=" << n;
  if (p) out << " p=" << *p;
  out << "\n 2j ";
  for (int j2 = 0; j2 <= n; ++j2) out << pad_left(std::to_string(j2), w);
  out << "\n";
  for (int k = 0; k <= n; ++k) {
    out << pad_left(std::to_string(k), 3) << ' ';
    for (int j2 = 0; j2 <= n; ++j2) {
      if (j2 <= k && (k - j2) % 2 == 0) out << pad_left(std::to_string(gamma_multiplicity(k, j2)), w);
      else out << pad_left(critical(j2) ? ":" : "", w);
    }
    out << "\n";
  }
  if (!p) return out.str();

  // one letter per non-critical orbit of row n, ordered by its leftmost j
  std::map<int, char> marker;
  std::vector<std::vector<int>> orbits;
  for (int j2 = n % 2; j2 <= n; j2 += 2) {
    if (critical(j2) || marker.count(j2)) continue;
    const auto orb = orbit_of(n, j2, *p);
    const char c = static_cast<char>('a' + static_cast<int>(orbits.size() % 26));
    for (int k2 : orb) marker[k2] = c;
    orbits.push_back(orb);
  }
  out << "orb ";
  for (int j2 = 0; j2 <= n; ++j2) {
    std::string s;
    if ((n - j2) % 2 == 0 && marker.count(j2)) s = std::string(1, marker[j2]);
    else if (critical(j2)) s = "|";
    out << pad_left(s, w);
  }
  out << "\n";
  for (const auto& orb : orbits) {
    out << marker[orb.front()] << ": orb_" << half_label(orb.front()) << " =";
    for (int j2 : orb) out << ' ' << half_label(j2);
    out << "\n";
  }
  out << "critical:";
  bool any = false;
  for (int j2 = n % 2; j2 <= n; j2 += 2)
    if (critical(j2)) {
      out << ' ' << half_label(j2);
      any = true;
    }
  if (!any) out << " none";
  out << "\n";
  return out.str();
}

}  // namespace tlq
