#include "tlq/json_io.hpp"

#include <map>

#include "tlq/render.hpp"

namespace tlq {

namespace {

json big_int(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<long long>(z.get_si()));
  return json(z.get_str());
}

json coefficient_triples(int low, const std::vector<Rational>& c) {
  json out = json::array();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    out.push_back(json::array({low + static_cast<int>(k), big_int(c[k].numerator()), big_int(c[k].denominator())}));
  }
  return out;
}

}  // namespace

json half_json(int x2) { return x2 % 2 ? json(x2 / 2.0) : json(x2 / 2); }

void to_json(json& j, const Rational& x) { j = json::array({big_int(x.numerator()), big_int(x.denominator())}); }

void to_json(json& j, const LaurentPoly& f) { j = coefficient_triples(f.low(), f.coeffs()); }

void to_json(json& j, const RatFunc& f) { j = json{{"num", json(f.num())}, {"den", json(f.den())}}; }

void to_json(json& j, const CycloNumber& c) {
  j = json{{"order", c.field() ? c.field()->order() : 1}, {"coeffs", coefficient_triples(0, c.coeffs())}};
}

void to_json(json& j, const RootSpec& r) { j = json{{"p", r.p}, {"l", r.l}}; }

void to_json(json& j, const CheckList& c) {
  j = json::object();
  std::map<std::string, int> seen;
  for (const auto& item : c.items) {
    const int k = ++seen[item.name];
    const std::string key = k == 1 ? item.name : item.name + "#" + std::to_string(k);
    j[key] = json{{"ok", item.ok}, {"detail", item.detail}};
  }
}

void to_json(json& j, const IdempotentCoeffs& c) {
  json coeffs = json::array();
  for (std::size_t i = 0; i < c.a.size(); ++i) coeffs.push_back(json{{"i", i}, {"value", json(c.a[i])}});
  j = json{{"n", c.n}, {"j", half_json(c.j2)}, {"m", half_json(c.m2)}, {"coefficients", std::move(coeffs)}};
}

void to_json(json& j, const FamilyReport& r) {
  json idem = json::array();
  for (const auto& x : r.idempotents)
    idem.push_back(json{{"j", half_json(x.j2)},
                        {"expected_trace", x.expected_trace},
                        {"trace", x.trace},
                        {"checks", json(x.checks)}});
  json probes = json::array();
  for (const auto& q : r.probes) probes.push_back(q.to_string());
  j = json{{"n", r.n},
           {"m", half_json(r.m2)},
           {"mode", to_string(r.mode)},
           {"probes", std::move(probes)},
           {"idempotents", std::move(idem)},
           {"family_checks", json(r.family_checks)},
           {"commutant_dim", r.commutant_dim},
           {"ok", r.ok()}};
}

void to_json(json& j, const DecompositionReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(json{{"module", module_label(e)},
                           {"kind", e.kind == ModuleKind::P ? "P" : "V"},
                           {"j", half_json(e.j2)},
                           {"multiplicity", e.multiplicity},
                           {"dimension", e.dimension}});
  j = json{{"n", r.n},
           {"root", r.root ? json(*r.root) : json(nullptr)},
           {"entries", std::move(entries)},
           {"total", r.total},
           {"checks", json(r.checks)},
           {"ok", r.checks.ok()}};
}

void to_json(json& j, const UqDecompositionReport& r) {
  static const char* kinds[] = {"paired", "unpaired", "critical"};
  json mods = json::array();
  for (const auto& m : r.modules)
    mods.push_back(json{{"module", uq_module_label(m)},
                        {"kind", kinds[static_cast<int>(m.kind)]},
                        {"j", half_json(m.j2)},
                        {"partner_j", m.partner_j2 >= 0 ? half_json(m.partner_j2) : json(nullptr)},
                        {"count", m.count},
                        {"dimension", m.dimension}});
  j = json{{"n", r.n},
           {"root", json(r.root)},
           {"modules", std::move(mods)},
           {"total", r.total},
           {"checks", json(r.checks)},
           {"ok", r.checks.ok()}};
}

void to_json(json& j, const CycleDiagram& d) {
  json cols = json::array();
  for (int j2 : d.j2s) cols.push_back(half_json(j2));
  json grid = json::array();
  for (const auto& row : d.grid) {
    json r = json::array();
    for (const auto& c : row) {
      if (c.spurious) r.push_back(nullptr);
      else r.push_back(json{{"a", c.label.a}, {"d", c.label.d}, {"g", c.label.g}, {"singular", c.singular}});
    }
    grid.push_back(std::move(r));
  }
  json cycles = json::array();
  for (const auto& c : d.cycles)
    cycles.push_back(json{{"i", c.i},
                          {"first_j", half_json(c.first_j2)},
                          {"last_j", half_json(c.last_j2)},
                          {"size", c.size()},
                          {"rightmost", c.rightmost}});
  json pairs = json::array();
  for (const auto& [a, b] : d.bound_pairs) pairs.push_back(json::array({half_json(a), half_json(b)}));
  json singular = json::array();
  for (const auto& [i, j2] : d.singular) singular.push_back(json::array({i, half_json(j2)}));
  json critical = json::array();
  for (int j2 : d.critical_j2) critical.push_back(half_json(j2));
  j = json{{"n", d.n},
           {"m", half_json(d.m2)},
           {"p", d.p},
           {"columns", std::move(cols)},
           {"grid", std::move(grid)},
           {"cycles", std::move(cycles)},
           {"bound_pairs", std::move(pairs)},
           {"singular", std::move(singular)},
           {"critical", std::move(critical)}};
}

void to_json(json& j, const ProjectorFamily& f) {
  json members = json::array();
  for (const auto& m : f.members)
    members.push_back(json{{"kind", to_string(m.kind)},
                           {"j", half_json(m.j2)},
                           {"partner_j", m.partner_j2 >= 0 ? half_json(m.partner_j2) : json(nullptr)},
                           {"expected_rank", m.expected_rank},
                           {"projector", operator_json(m.projector)},
                           {"nilpotent", m.nilpotent ? operator_json(*m.nilpotent) : json(nullptr)}});
  j = json{{"n", f.n}, {"m", half_json(f.m2)}, {"root", json(f.root)}, {"note", f.note}, {"members", std::move(members)}};
}

}  // namespace tlq
