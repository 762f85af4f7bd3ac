#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spectrum.hpp"
#include "tlq/identity_suites.hpp"
#include "tlq/idempotent.hpp"
#include "tlq/json_io.hpp"
#include "tlq/linkstate.hpp"
#include "tlq/qnum.hpp"
#include "tlq/render.hpp"
#include "tlq/rootlimit.hpp"
#include "tlq/uq_pairing.hpp"

using namespace tlq;
using tlq::cli::block_spectrum;
using tlq::cli::block_spectrum_at_root;

namespace {

constexpr int kDecomposeMaxN = 62;
constexpr int kBratteliMaxN = 40;
constexpr int kCyclesMaxN = 62;
constexpr int kPsiMaxN = 10;
constexpr int kPsiCheckMaxN = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "3/2" -> 3, "2" -> 4, "-1/2" -> -1
int parse_half(const std::string& s, const char* flag) {
  try {
    std::size_t used = 0;
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return 2 * v;
    }
    const std::string top = s.substr(0, slash), bottom = s.substr(slash + 1);
    const int a = std::stoi(top, &used);
    if (used != top.size()) throw std::invalid_argument(s);
    const int b = std::stoi(bottom, &used);
    if (used != bottom.size()) throw std::invalid_argument(s);
    if (b == 1) return 2 * a;
    if (b == 2) return a;
    if (b == -2) return -a;
  } catch (const std::logic_error&) {
  }
  throw UsageError(std::string("--") + flag + ": expected an integer or a half-integer such as 3/2, got '" + s + "'");
}

struct Common {
  int n = 0;
  std::string m;
  int m2 = 0;
  bool m_set = false;
  int p = 0;
  int l = 1;
  std::string format = "text";
  std::string out;

  std::optional<RootSpec> root() const {
    if (p == 0) return std::nullopt;
    return RootSpec(p, l);
  }
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* app, Common& c, bool with_m, bool with_p) {
  app->add_option("--n", c.n, "number of sites")->required()->check(CLI::PositiveNumber);
  if (with_m) app->add_option("--m", c.m, "weight m as an integer or fraction, e.g. 3/2");
  if (with_m) app->add_option("--m2", c.m2, "weight as the doubled integer 2m");
  if (with_p) {
    app->add_option("--p", c.p, "root of unity q = exp(i pi l / p)")->check(CLI::Range(2, 1000));
    app->add_option("--l", c.l, "numerator l of the root, gcd(l, p) = 1")->check(CLI::PositiveNumber);
  }
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--out", c.out, "write the report to this file instead of stdout");
}

void resolve_m(CLI::App* app, Common& c) {
  const bool by_fraction = app->count("--m") > 0;
  const bool by_double = app->count("--m2") > 0;
  if (by_fraction && by_double) throw UsageError("give either --m or --m2, not both");
  if (by_fraction) c.m2 = parse_half(c.m, "m");
  c.m_set = by_fraction || by_double;
  if (c.m_set && (c.m2 < -c.n || c.m2 > c.n || (c.n - c.m2) % 2 != 0))
    throw UsageError("weight m = " + half_label(c.m2) + " is not admissible for n = " + std::to_string(c.n));
}

void enforce_cap(const char* verb, int n, int cap) {
  const int eff = desk_cap(cap);
  if (n > eff)
    throw UsageError(std::string(verb) + ": n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(eff) +
                     " (set TLQ_MAX_N to override at your own risk)");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + c.out + " for writing");
  f << text;
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

std::string checks_text(const CheckList& list, const std::string& indent = "  ") {
  std::string s;
  for (const auto& item : list.items) {
    s += indent + (item.ok ? "PASS " : "FAIL ") + item.name;
    if (!item.detail.empty()) s += "  " + item.detail;
    s += "\n";
  }
  return s;
}

std::string col(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::vector<int> weights_from(const Common& c) {
  if (c.m_set) return {std::abs(c.m2)};
  std::vector<int> out;
  for (int m2 = c.n % 2; m2 <= c.n; m2 += 2) out.push_back(m2);
  return out;
}

// ---- decompose ----

int cmd_decompose(CLI::App* app, Common& c, bool pairing) {
  resolve_m(app, c);
  enforce_cap("decompose", c.n, kDecomposeMaxN);
  const auto root = c.root();

  if (c.m_set) {
    const int m2 = std::abs(c.m2);
    const auto blocks = weight_space_blocks(c.n, m2, root);
    unsigned long long sum = 0;
    for (const auto& e : blocks) sum += e.dimension;
    CheckList checks;
    const unsigned long long want = WeightSpace(c.n, m2).dim();
    checks.add("dimension_audit", sum == want, std::to_string(sum) + " vs dim W_m = " + std::to_string(want));
    std::optional<PairClassification> pc;
    if (root) pc = bound_pairs(c.n, m2, root->p);
    if (c.json()) {
      json b = json::array();
      for (const auto& e : blocks)
        b.push_back(json{{"module", module_label(e)}, {"kind", e.kind == ModuleKind::P ? "P" : "V"}, {"j", half_json(e.j2)},
                         {"dimension", e.dimension}});
      json j{{"n", c.n}, {"m", half_json(m2)}, {"root", root ? json(*root) : json(nullptr)}, {"blocks", std::move(b)}};
      if (pc) {
        json pairs = json::array(), crit = json::array(), unb = json::array();
        for (const auto& [a, bb] : pc->pairs) pairs.push_back(json::array({half_json(a), half_json(bb)}));
        for (int x : pc->critical) crit.push_back(half_json(x));
        for (int x : pc->unbound) unb.push_back(half_json(x));
        j["bound_pairs"] = std::move(pairs);
        j["critical"] = std::move(crit);
        j["unbound"] = std::move(unb);
      }
      j["checks"] = json(checks);
      j["ok"] = checks.ok();
      emit(c, j);
    } else {
      std::ostringstream s;
      s << "W_" << half_label(m2) << " in n=" << c.n;
      if (root) s << " at " << root->to_string();
      s << "\n";
      if (pc) {
        s << "bound pairs:";
        for (const auto& [a, b] : pc->pairs) s << " (" << half_label(a) << "," << half_label(b) << ")";
        s << "\ncritical:";
        for (int x : pc->critical) s << ' ' << half_label(x);
        s << "\nunbound:";
        for (int x : pc->unbound) s << ' ' << half_label(x);
        s << "\n";
      }
      s << col("block", 10) << "dimension\n";
      for (const auto& e : blocks) s << col(module_label(e), 10) << e.dimension << "\n";
      s << checks_text(checks, "");
      emit(c, s.str());
    }
    return checks.ok() ? 0 : 1;
  }

  const DecompositionReport rep = multiplicities(c.n, root);
  std::optional<UqDecompositionReport> uq;
  if (pairing) {
    if (!root) throw UsageError("decompose: --pairing requires --p");
    enforce_cap("decompose --pairing", c.n, kUqPairingMaxN);
    uq = uq_pair_decompose(c.n, *root);
  }
  bool ok = rep.checks.ok() && (!uq || uq->checks.ok());
  if (c.json()) {
    json j = rep;
    json listing = json::array();
    for (int m2 = c.n % 2; m2 <= c.n; m2 += 2) {
      json b = json::array();
      for (const auto& e : weight_space_blocks(c.n, m2, root)) b.push_back(module_label(e));
      listing.push_back(json{{"m", half_json(m2)}, {"blocks", std::move(b)}});
    }
    j["weight_spaces"] = std::move(listing);
    if (uq) j["pairing"] = *uq;
    j["ok"] = ok;
    emit(c, j);
  } else {
    std::ostringstream s;
    s << "n=" << c.n;
    if (root) s << " at " << root->to_string();
    else s << " generic q";
    s << "\n" << col("module", 10) << col("multiplicity", 14) << "dimension\n";
    for (const auto& e : rep.entries) s << col(module_label(e), 10) << col(std::to_string(e.multiplicity), 14) << e.dimension << "\n";
    s << "total " << rep.total << " = 2^" << c.n << "\n";
    for (int m2 = c.n % 2; m2 <= c.n; m2 += 2) {
      s << "W_" << half_label(m2) << ":";
      for (const auto& e : weight_space_blocks(c.n, m2, root)) s << ' ' << module_label(e);
      s << "\n";
    }
    s << checks_text(rep.checks, "");
    if (uq) {
      s << "U_q pairing:\n";
      for (const auto& m : uq->modules)
        s << "  " << col(uq_module_label(m), 12) << col(std::to_string(m.count), 6) << "dim " << m.dimension << "\n";
      s << checks_text(uq->checks);
    }
    emit(c, s.str());
  }
  return ok ? 0 : 1;
}

// ---- idempotent ----

int cmd_idempotent(CLI::App* app, Common& c, const std::string& j_str, bool matrix) {
  resolve_m(app, c);
  if (!c.m_set) throw UsageError("idempotent: --m is required");
  const int m2 = c.m2;
  if (m2 < 0) throw UsageError("idempotent: requires m >= 0");
  const auto root = c.root();

  if (j_str.empty()) {
    if (!root) throw UsageError("idempotent: --j is required unless --p is given");
    enforce_cap("idempotent", c.n, kRootFamilyMaxN);
    const ProjectorFamily fam = projector_family(c.n, m2, *root);
    if (c.json()) {
      emit(c, json(fam));
    } else {
      std::ostringstream s;
      s << "projector family n=" << c.n << " m=" << half_label(m2) << " at " << root->to_string() << "\n";
      if (!fam.note.empty()) s << "note: " << fam.note << "\n";
      for (const auto& mem : fam.members) {
        s << col(to_string(mem.kind), 10) << "j=" << half_label(mem.j2);
        if (mem.partner_j2 >= 0) s << " j'=" << half_label(mem.partner_j2);
        s << "  rank " << mem.expected_rank << "  nnz " << mem.projector.mat.nnz();
        if (mem.nilpotent) s << "  nilpotent nnz " << mem.nilpotent->mat.nnz();
        s << "\n";
      }
      emit(c, s.str());
    }
    return 0;
  }

  const int j2 = parse_half(j_str, "j");
  if (j2 < m2 || j2 > c.n || (j2 - m2) % 2 != 0) throw UsageError("idempotent: requires m <= j <= n/2 with j - m integral");
  const IdempotentCoeffs co = idempotent_coeffs(c.n, j2, m2);
  std::optional<Operator<RatFunc>> z;
  std::optional<Operator<CycloNumber>> zc;
  if (matrix) {
    enforce_cap("idempotent --matrix", c.n, kSymbolicMaxN);
    if (root) zc = regular_idempotent(c.n, j2, m2, *root);
    else z = idempotent_z(c.n, j2, m2);
  }

  if (c.json()) {
    json j = co;
    if (root) {
      json info = json::array();
      for (int i = 0; i < static_cast<int>(co.a.size()); ++i) {
        if (i < (j2 - m2) / 2) {
          info.push_back(nullptr);
          continue;
        }
        const LabelTriple t = labels(i, j2, m2, root->p);
        info.push_back(json{{"a", t.a}, {"d", t.d}, {"g", t.g}, {"order", order_at_root(co.a[static_cast<std::size_t>(i)], *root)},
                            {"singular", is_singular(i, j2, m2, *root)}});
      }
      j["root"] = *root;
      j["at_root"] = std::move(info);
    }
    if (z) j["operator"] = operator_json(*z);
    if (zc) j["operator"] = operator_json(*zc);
    emit(c, j);
    return 0;
  }
  std::ostringstream s;
  s << "z_{" << half_label(j2) << "," << half_label(m2) << "} on n=" << c.n;
  if (root) s << " at " << root->to_string();
  s << "\n";
  for (int i = 0; i < static_cast<int>(co.a.size()); ++i) {
    s << "a_" << i << " = " << co.a[static_cast<std::size_t>(i)].to_string();
    if (root && i >= (j2 - m2) / 2) {
      const LabelTriple t = labels(i, j2, m2, root->p);
      s << "   (" << t.a << "," << t.d << "," << t.g << ") order " << order_at_root(co.a[static_cast<std::size_t>(i)], *root)
        << (is_singular(i, j2, m2, *root) ? " singular" : "");
    }
    s << "\n";
  }
  auto dump_op = [&](const auto& op) {
    s << "matrix " << op.rows() << "x" << op.cols() << "\n";
    for (std::size_t r = 0; r < op.rows(); ++r)
      for (const auto& [cc, x] : op.mat.row(r)) s << "  " << r << " " << cc << "  " << x.to_string() << "\n";
  };
  if (z) dump_op(*z);
  if (zc) dump_op(*zc);
  emit(c, s.str());
  return 0;
}

// ---- verify ----

struct Section {
  std::string title;
  json data;
  CheckList checks;
};

int finish_verify(const Common& c, const std::string& scope, std::vector<Section>& sections) {
  bool ok = true;
  for (const auto& sec : sections) ok = ok && sec.checks.ok();
  if (c.json()) {
    json arr = json::array();
    for (auto& sec : sections) arr.push_back(std::move(sec.data));
    emit(c, json{{"scope", scope}, {"sections", std::move(arr)}, {"ok", ok}});
  } else {
    std::string s;
    std::size_t pass = 0, total = 0;
    for (const auto& sec : sections) {
      s += "[" + sec.title + "]\n" + checks_text(sec.checks);
      for (const auto& it : sec.checks.items) {
        ++total;
        if (it.ok) ++pass;
      }
    }
    s += std::to_string(pass) + "/" + std::to_string(total) + " checks passed\n";
    emit(c, s);
  }
  return ok ? 0 : 1;
}

CheckList flatten(const FamilyReport& r) {
  CheckList out;
  for (const auto& idem : r.idempotents)
    for (const auto& it : idem.checks.items) out.add("j=" + half_label(idem.j2) + " " + it.name, it.ok, it.detail);
  for (const auto& it : r.family_checks.items) out.add(it.name, it.ok, it.detail);
  return out;
}

int cmd_verify(CLI::App* app, Common& c, bool appendix, int max_n, const std::string& mode_str) {
  std::vector<Section> sections;
  if (appendix) {
    enforce_cap("verify --appendix", max_n, 6);
    Section sec{"identities n<=" + std::to_string(max_n), {}, identity_suites(max_n)};
    sec.data = json{{"max", max_n}, {"checks", json(sec.checks)}};
    sections.push_back(std::move(sec));
    return finish_verify(c, "appendix", sections);
  }
  if (c.n == 0) throw UsageError("verify: --n is required unless --appendix is given");
  resolve_m(app, c);
  const auto ms = weights_from(c);
  const auto root = c.root();

  if (root) {
    enforce_cap("verify", c.n, kRootFamilyMaxN);
    std::vector<std::future<Section>> jobs;
    for (int m2 : ms)
      jobs.push_back(std::async(std::launch::async, [n = c.n, m2, r = *root] {
        const ProjectorFamily fam = projector_family(n, m2, r);
        Section sec{"n=" + std::to_string(n) + " m=" + half_label(m2) + " " + r.to_string(), {}, verify_projector_family(fam)};
        json members = json::array();
        for (const auto& mem : fam.members)
          members.push_back(json{{"kind", to_string(mem.kind)},
                                 {"j", half_json(mem.j2)},
                                 {"partner_j", mem.partner_j2 >= 0 ? half_json(mem.partner_j2) : json(nullptr)},
                                 {"expected_rank", mem.expected_rank},
                                 {"has_nilpotent", mem.nilpotent.has_value()}});
        sec.data = json{{"n", n}, {"m", half_json(m2)}, {"root", json(r)}, {"note", fam.note}, {"members", std::move(members)},
                        {"checks", json(sec.checks)}, {"ok", sec.checks.ok()}};
        return sec;
      }));
    for (auto& f : jobs) sections.push_back(f.get());
    return finish_verify(c, "root_family", sections);
  }

  VerifyMode mode = c.n <= kSymbolicMaxN ? VerifyMode::Symbolic : VerifyMode::Probe;
  if (mode_str == "symbolic") mode = VerifyMode::Symbolic;
  if (mode_str == "probe") mode = VerifyMode::Probe;
  enforce_cap("verify", c.n, mode == VerifyMode::Symbolic ? kSymbolicMaxN : kProbeMaxN);
  std::vector<std::future<Section>> jobs;
  for (int m2 : ms)
    jobs.push_back(std::async(std::launch::async, [n = c.n, m2, mode] {
      const FamilyReport rep = verify_family(n, m2, mode);
      Section sec{"n=" + std::to_string(n) + " m=" + half_label(m2) + " " + to_string(mode), json(rep), flatten(rep)};
      if (n <= kPsiCheckMaxN) {
        const PsiReport psi = verify_psi_homomorphism(n, (n - m2) / 2);
        sec.checks.add("psi_homomorphism", psi.ok, psi.ok ? std::to_string(psi.checks) + " relations" : psi.detail);
        sec.data["psi_homomorphism"] = json{{"ok", psi.ok}, {"relations", psi.checks}, {"detail", psi.detail}};
        sec.data["ok"] = sec.data["ok"].get<bool>() && psi.ok;
      }
      return sec;
    }));
  for (auto& f : jobs) sections.push_back(f.get());
  return finish_verify(c, "generic_family", sections);
}

// ---- bratteli / cycles ----

int cmd_bratteli(Common& c) {
  enforce_cap("bratteli", c.n, kBratteliMaxN);
  const std::optional<int> p = c.p ? std::optional<int>(c.p) : std::nullopt;
  if (!c.json()) {
    emit(c, render_bratteli(c.n, p));
    return 0;
  }
  json rows = json::array();
  for (int k = 0; k <= c.n; ++k) {
    json row = json::array();
    for (int j2 = k % 2; j2 <= k; j2 += 2) row.push_back(json{{"j", half_json(j2)}, {"gamma", gamma_multiplicity(k, j2)}});
    rows.push_back(std::move(row));
  }
  json j{{"n", c.n}, {"p", p ? json(*p) : json(nullptr)}, {"rows", std::move(rows)}};
  if (p) {
    json orbits = json::array(), crit = json::array();
    std::vector<bool> seen(static_cast<std::size_t>(c.n + 1), false);
    for (int j2 = c.n % 2; j2 <= c.n; j2 += 2) {
      if (is_critical(j2, *p)) {
        crit.push_back(half_json(j2));
        continue;
      }
      if (seen[static_cast<std::size_t>(j2)]) continue;
      json o = json::array();
      for (int k2 : orbit_of(c.n, j2, *p)) {
        seen[static_cast<std::size_t>(k2)] = true;
        o.push_back(half_json(k2));
      }
      orbits.push_back(std::move(o));
    }
    j["critical"] = std::move(crit);
    j["orbits"] = std::move(orbits);
  }
  emit(c, j);
  return 0;
}

int cmd_cycles(CLI::App* app, Common& c) {
  resolve_m(app, c);
  if (!c.m_set) throw UsageError("cycles: --m is required");
  if (c.p == 0) throw UsageError("cycles: --p is required");
  if (c.m2 < 0) throw UsageError("cycles: requires m >= 0");
  enforce_cap("cycles", c.n, kCyclesMaxN);
  const CycleDiagram d = cycle_diagram(c.n, c.m2, c.p);
  if (c.json()) emit(c, json(d));
  else emit(c, render_cycle_diagram(d));
  return 0;
}

// ---- spectrum ----

int cmd_spectrum(CLI::App* app, Common& c, const std::string& q_str, double tol) {
  resolve_m(app, c);
  if (!c.m_set) c.m2 = c.n % 2;
  if (c.m2 < 0) throw UsageError("spectrum: requires m >= 0");
  enforce_cap("spectrum", c.n, tlq::cli::kSpectrumMaxN);
  tlq::cli::SpectrumReport rep;
  if (c.p) {
    if (!q_str.empty()) throw UsageError("spectrum: give either --q or --p");
    enforce_cap("spectrum --p", c.n, kRootFamilyMaxN);
    rep = block_spectrum_at_root(c.n, c.m2, *c.root(), tol > 0 ? tol : 1e-5);
  } else {
    if (q_str.empty()) throw UsageError("spectrum: --q or --p is required");
    rep = block_spectrum(c.n, c.m2, tlq::cli::parse_complex(q_str), tol > 0 ? tol : 1e-8);
  }
  if (c.json()) emit(c, tlq::cli::spectrum_json(rep));
  else emit(c, tlq::cli::spectrum_text(rep) + checks_text(rep.checks, ""));
  return rep.checks.ok() ? 0 : 1;
}

// ---- psi ----

int cmd_psi(Common& c, int ell, bool check) {
  enforce_cap("psi", c.n, kPsiMaxN);
  if (ell < 0 || 2 * ell > c.n) throw UsageError("psi: requires 0 <= ell <= n/2");
  const auto basis = link_basis(c.n, ell);
  const WeightSpace w(c.n, c.n - 2 * ell);
  std::optional<PsiReport> rep;
  if (check) {
    enforce_cap("psi --check", c.n, kPsiCheckMaxN);
    rep = verify_psi_homomorphism(c.n, ell);
  }
  if (c.json()) {
    json pats = json::array();
    for (const auto& pat : basis) {
      const auto img = psi(pat);
      json terms = json::array();
      for (std::size_t k = 0; k < img.size(); ++k)
        if (!img[k].is_zero()) terms.push_back(json{{"state", w.label(w.state(k))}, {"coeff", json(img[k])}});
      pats.push_back(json{{"pattern", pat.to_string()}, {"image", std::move(terms)}});
    }
    json j{{"n", c.n}, {"ell", ell}, {"patterns", std::move(pats)}};
    if (rep) j["check"] = json{{"ok", rep->ok}, {"relations", rep->checks}, {"detail", rep->detail}};
    emit(c, j);
  } else {
    std::ostringstream s;
    for (const auto& pat : basis) {
      const auto img = psi(pat);
      s << pat.to_string() << " ->";
      bool first = true;
      for (std::size_t k = 0; k < img.size(); ++k) {
        if (img[k].is_zero()) continue;
        s << (first ? " " : " + ") << "(" << img[k].to_string() << ")|" << w.label(w.state(k)) << ">";
        first = false;
      }
      s << "\n";
    }
    if (rep) s << (rep->ok ? "PASS" : "FAIL") << " psi_homomorphism  " << (rep->ok ? std::to_string(rep->checks) + " relations" : rep->detail) << "\n";
    emit(c, s.str());
  }
  return !rep || rep->ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb idempotents on spin chains: decompositions, projectors and checks"};
  app.require_subcommand(1);

  Common dec, idem, ver, bra, cyc, spec, ps;
  bool pairing = false, matrix = false, appendix = false, check = false;
  int max_n = 6, ell = 0;
  double tol = 0.0;
  std::string j_str, mode_str = "auto", q_str;

  auto* s_dec = app.add_subcommand("decompose", "multiplicities of indecomposable summands with the 2^n audit");
  add_common(s_dec, dec, true, true);
  s_dec->add_flag("--pairing", pairing, "also build the U_q highest-weight pairing (n <= 10)");

  auto* s_idem = app.add_subcommand("idempotent", "coefficients of z_{j,m}, or the projector family at a root");
  add_common(s_idem, idem, true, true);
  s_idem->add_option("--j", j_str, "spin j as an integer or fraction");
  s_idem->add_flag("--matrix", matrix, "include the matrix of z_{j,m}");

  auto* s_ver = app.add_subcommand("verify", "exact verification suites");
  ver.n = 0;
  s_ver->add_option("--n", ver.n, "number of sites")->check(CLI::PositiveNumber);
  s_ver->add_option("--m", ver.m, "weight m as an integer or fraction");
  s_ver->add_option("--m2", ver.m2, "weight as the doubled integer 2m");
  s_ver->add_option("--p", ver.p, "root of unity q = exp(i pi l / p)")->check(CLI::Range(2, 1000));
  s_ver->add_option("--l", ver.l, "numerator l of the root")->check(CLI::PositiveNumber);
  s_ver->add_option("--format", ver.format, "output format")->check(CLI::IsMember({"text", "json"}));
  s_ver->add_option("--out", ver.out, "write the report to this file");
  s_ver->add_option("--mode", mode_str, "generic verification mode")->check(CLI::IsMember({"auto", "symbolic", "probe"}));
  s_ver->add_flag("--appendix", appendix, "run the q-number and U_q identity suites");
  s_ver->add_option("--max", max_n, "largest n for the identity suites")->check(CLI::PositiveNumber);

  auto* s_bra = app.add_subcommand("bratteli", "Bratteli diagram of Gamma values");
  add_common(s_bra, bra, false, true);

  auto* s_cyc = app.add_subcommand("cycles", "label grid of the coefficients a_{i,j,m} at a root");
  add_common(s_cyc, cyc, true, true);

  auto* s_spec = app.add_subcommand("spectrum", "block spectra of H = sum e_i at numeric q");
  add_common(s_spec, spec, true, true);
  s_spec->add_option("--q", q_str, "complex q such as 0.7+0.3i");
  s_spec->add_option("--tol", tol, "spectrum matching tolerance (relative)");

  auto* s_psi = app.add_subcommand("psi", "images of link patterns in the spin chain");
  add_common(s_psi, ps, false, false);
  s_psi->add_option("--ell", ell, "number of arcs")->required();
  s_psi->add_flag("--check", check, "verify that psi intertwines the e_i");

  CLI11_PARSE(app, argc, argv);

  if (desk_cap_overridden())
    std::cerr << "warning: TLQ_MAX_N overrides the desk-scale caps; large runs may exhaust time or memory\n";

  try {
    if (s_dec->parsed()) return cmd_decompose(s_dec, dec, pairing);
    if (s_idem->parsed()) return cmd_idempotent(s_idem, idem, j_str, matrix);
    if (s_ver->parsed()) return cmd_verify(s_ver, ver, appendix, max_n, mode_str);
    if (s_bra->parsed()) return cmd_bratteli(bra);
    if (s_cyc->parsed()) return cmd_cycles(s_cyc, cyc);
    if (s_spec->parsed()) return cmd_spectrum(s_spec, spec, q_str, tol);
    if (s_psi->parsed()) return cmd_psi(ps, ell, check);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
