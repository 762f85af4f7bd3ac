#include "tlq/rootlimit.hpp"

#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "tlq/idempotent.hpp"
#include "tlq/qnum.hpp"

namespace tlq {

namespace {

int mod(int x, int p) {
  const int r = x % p;
  return r < 0 ? r + p : r;
}

void require_root_weights(int n, int j2, int m2) {
  if (m2 < 0 || j2 < m2 || j2 > n || (j2 - m2) % 2 != 0 || (n - m2) % 2 != 0)
    throw std::invalid_argument("rootlimit: requires 0 <= m <= j <= n/2 with matching parities");
}

std::string half(int x2) { return x2 % 2 ? std::to_string(x2) + "/2" : std::to_string(x2 / 2); }

int block_of(int j2, int m2, int p) { return (j2 - m2) / 2 / p; }

Operator<CycloNumber> zero_op(int n, int m2) {
  WeightSpace w(n, m2);
  return Operator<CycloNumber>{n, m2, m2, SparseMatrix<CycloNumber>(w.dim(), w.dim())};
}

Operator<CycloNumber> contract(int n, int m2, const RootSpec& root, const std::vector<CycloNumber>& c) {
  Operator<CycloNumber> out = zero_op(n, m2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    out += s_r_at_root(n, static_cast<int>(i), m2, root)->scaled(c[i]);
  }
  return out;
}

}  // namespace

LabelTriple labels(int i, int j2, int m2, int p) {
  if (p < 2) throw std::invalid_argument("labels: p must be at least 2");
  if (i < 0 || j2 < m2 || (j2 - m2) % 2 != 0) throw std::invalid_argument("labels: requires i >= 0 and m <= j");
  const int jm = (j2 - m2) / 2;
  const int top = i + (j2 + m2) / 2 + 1;
  LabelTriple t{i / p, i % p, jm / p, jm % p, top / p, top % p};
  if (mod(t.g - t.d - t.a - (m2 + 1), p) != 0) throw std::logic_error("labels: g - d - a differs from 2m + 1 mod p");
  return t;
}

bool is_critical(int j2, int p) { return (j2 + 1) % p == 0; }

bool singular_by_labels(int i, int j2, int m2, int p) {
  if (is_critical(j2, p)) return false;
  const LabelTriple t = labels(i, j2, m2, p);
  return t.g <= t.a && t.d <= t.a;
}

bool is_singular(int i, int j2, int m2, const RootSpec& root) {
  if (i < (j2 - m2) / 2) throw std::invalid_argument("is_singular: coefficient is spurious");
  const bool by_labels = singular_by_labels(i, j2, m2, root.p);
  const int ord = order_at_root(coeff_a(i, j2, m2), root);
  if (ord < -1) {
    throw std::logic_error("is_singular: pole of order " + std::to_string(-ord) + " for a_{" + std::to_string(i) + "," +
                           half(j2) + "," + half(m2) + "}");
  }
  if (by_labels != (ord < 0)) {
    throw std::logic_error("is_singular: label criterion disagrees with the order at " + root.to_string() + " for a_{" +
                           std::to_string(i) + "," + half(j2) + "," + half(m2) + "}");
  }
  return by_labels;
}

PairClassification bound_pairs(int n, int m2, int p) {
  if (m2 < 0 || m2 > n || (n - m2) % 2 != 0) throw std::invalid_argument("bound_pairs: invalid weight");
  PairClassification out;
  const std::vector<int> js = admissible_j2(n, m2);
  std::map<int, WeightKind> kind;
  for (std::size_t x = 0; x < js.size(); ++x) {
    const int j2 = js[x];
    if (is_critical(j2, p)) {
      kind[j2] = WeightKind::Critical;
      out.critical.push_back(j2);
      continue;
    }
    if (kind.count(j2)) continue;
    for (std::size_t y = x + 1; y < js.size(); ++y) {
      const int k2 = js[y];
      if (block_of(k2, m2, p) != block_of(j2, m2, p)) break;
      if ((j2 + k2 + 2) % (2 * p) == 0) {
        out.pairs.emplace_back(j2, k2);
        kind[j2] = kind[k2] = WeightKind::Bound;
        break;
      }
    }
    if (!kind.count(j2)) {
      kind[j2] = WeightKind::Unbound;
      out.unbound.push_back(j2);
    }
  }
  for (int j2 : js) out.kinds.emplace_back(j2, kind.at(j2));
  return out;
}

std::string to_string(WeightKind k) {
  switch (k) {
    case WeightKind::Critical: return "critical";
    case WeightKind::Bound: return "bound";
    case WeightKind::Unbound: return "unbound";
  }
  return "?";
}

CycleDiagram cycle_diagram(int n, int m2, int p) {
  if (p < 2) throw std::invalid_argument("cycle_diagram: p must be at least 2");
  CycleDiagram d;
  d.n = n;
  d.m2 = m2;
  d.p = p;
  d.j2s = admissible_j2(n, m2);
  const int top_i = (n - m2) / 2;
  d.grid.assign(static_cast<std::size_t>(top_i + 1), std::vector<CycleCell>(d.j2s.size()));
  for (int i = 0; i <= top_i; ++i) {
    for (std::size_t c = 0; c < d.j2s.size(); ++c) {
      const int j2 = d.j2s[c];
      CycleCell& cell = d.grid[static_cast<std::size_t>(i)][c];
      cell.label = labels(i, j2, m2, p);
      cell.spurious = i < (j2 - m2) / 2;
      if (!cell.spurious && singular_by_labels(i, j2, m2, p)) {
        cell.singular = true;
        d.singular.emplace_back(i, j2);
      }
    }
    // normal j on this line: j - m <= i
    std::vector<Cycle> line;
    for (int j2 : d.j2s) {
      if ((j2 - m2) / 2 > i) break;
      if (line.empty() || block_of(j2, m2, p) != block_of(line.back().first_j2, m2, p)) {
        line.push_back(Cycle{i, j2, j2, false});
      } else {
        line.back().last_j2 = j2;
      }
    }
    line.back().rightmost = true;
    if (line.back().size() != i % p + 1) throw std::logic_error("cycle_diagram: rightmost cycle size differs from a + 1");
    d.cycles.insert(d.cycles.end(), line.begin(), line.end());
  }
  const PairClassification pc = bound_pairs(n, m2, p);
  d.bound_pairs = pc.pairs;
  d.critical_j2 = pc.critical;
  return d;
}

std::shared_ptr<const Operator<CycloNumber>> s_r_at_root(int n, int i, int m2, const RootSpec& root) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int, int>, std::shared_ptr<const Operator<CycloNumber>>> cache;
  const auto key = std::make_tuple(n, i, m2, root.p, root.l);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto op = std::make_shared<const Operator<CycloNumber>>(to_cyclo(*s_r_shared(n, i, m2), root));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, op).first->second;
}

Operator<CycloNumber> regular_idempotent(int n, int j2, int m2, const RootSpec& root) {
  require_root_weights(n, j2, m2);
  const IdempotentCoeffs co = idempotent_coeffs(n, j2, m2);
  std::vector<CycloNumber> c;
  for (const RatFunc& a : co.a) c.push_back(eval_at_root(a, root));
  return contract(n, m2, root, c);
}

Operator<CycloNumber> limit_idempotent(int n, WeightPair pair, int m2, const RootSpec& root) {
  require_root_weights(n, pair.first, m2);
  require_root_weights(n, pair.second, m2);
  const IdempotentCoeffs lo = idempotent_coeffs(n, pair.first, m2);
  const IdempotentCoeffs hi = idempotent_coeffs(n, pair.second, m2);
  std::vector<CycloNumber> c;
  for (std::size_t i = 0; i < lo.a.size(); ++i) {
    const RatFunc s = lo.a[i] + hi.a[i];
    if (!s.is_zero() && order_at_root(s, root) < 0) {
      throw std::logic_error("limit_idempotent: residual pole at i = " + std::to_string(i) + " for the pair (" +
                             half(pair.first) + ", " + half(pair.second) + ")");
    }
    c.push_back(eval_at_root(s, root));
  }
  return contract(n, m2, root, c);
}

Operator<CycloNumber> nilpotent(int n, WeightPair pair, int m2, const RootSpec& root) {
  require_root_weights(n, pair.first, m2);
  const IdempotentCoeffs lo = idempotent_coeffs(n, pair.first, m2);
  const RatFunc qp(q_int(root.p));
  std::vector<CycloNumber> c;
  for (const RatFunc& a : lo.a) c.push_back(eval_at_root(a * qp, root));
  Operator<CycloNumber> out = contract(n, m2, root, c);
  if (out.mat.is_zero()) throw std::logic_error("nilpotent: limit of [p] z vanishes for j = " + half(pair.first));
  return out;
}

std::string to_string(MemberKind k) {
  switch (k) {
    case MemberKind::Critical: return "critical";
    case MemberKind::Unbound: return "unbound";
    case MemberKind::BoundPair: return "bound-pair";
  }
  return "?";
}

ProjectorFamily projector_family(int n, int m2, const RootSpec& root) {
  if (n < 1 || n > desk_cap(kRootFamilyMaxN))
    throw std::invalid_argument("projector_family: n must satisfy 1 <= n <= " + std::to_string(desk_cap(kRootFamilyMaxN)));
  if (m2 < 0 || m2 > n || (n - m2) % 2 != 0) throw std::invalid_argument("projector_family: invalid weight");
  ProjectorFamily fam;
  fam.n = n;
  fam.m2 = m2;
  fam.root = root;
  const PairClassification pc = bound_pairs(n, m2, root.p);
  if (root.p > n) fam.note = "p exceeds n: no bound pairs, the generic family is regular at the root";
  else if (pc.pairs.empty()) fam.note = "no bound pairs on this weight space";

  std::map<int, int> partner;
  for (const auto& [a, b] : pc.pairs) partner[a] = b;
  for (const auto& [j2, kind] : pc.kinds) {
    if (kind == WeightKind::Bound && !partner.count(j2)) continue;
    FamilyMember mem;
    mem.j2 = j2;
    if (kind == WeightKind::Bound) {
      mem.kind = MemberKind::BoundPair;
      mem.partner_j2 = partner.at(j2);
      mem.expected_rank = gamma_multiplicity(n, j2) + gamma_multiplicity(n, mem.partner_j2);
      mem.projector = limit_idempotent(n, {j2, mem.partner_j2}, m2, root);
      mem.nilpotent = nilpotent(n, {j2, mem.partner_j2}, m2, root);
    } else {
      mem.kind = kind == WeightKind::Critical ? MemberKind::Critical : MemberKind::Unbound;
      mem.expected_rank = gamma_multiplicity(n, j2);
      mem.projector = regular_idempotent(n, j2, m2, root);
    }
    fam.members.push_back(std::move(mem));
  }
  return fam;
}

CheckList verify_projector_family(const ProjectorFamily& fam, bool with_commutant) {
  CheckList out;
  const int n = fam.n;
  const int m2 = fam.m2;
  const RootSpec& root = fam.root;
  const std::size_t k = fam.members.size();
  const auto field = CyclotomicField::get(root.v_order());
  const CycloScalars ring(root);

  auto label = [&](std::size_t a) {
    const FamilyMember& mem = fam.members[a];
    return mem.kind == MemberKind::BoundPair ? "(" + half(mem.j2) + "," + half(mem.partner_j2) + ")" : half(mem.j2);
  };

  std::vector<std::vector<std::future<Operator<CycloNumber>>>> prods(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      prods[a].push_back(std::async(std::launch::async, [&fam, a, b] {
        return fam.members[a].projector * fam.members[b].projector;
      }));

  Operator<CycloNumber> sum = zero_op(n, m2);
  bool idem = true, orth = true;
  std::string idem_detail, orth_detail;
  for (std::size_t a = 0; a < k; ++a) {
    sum += fam.members[a].projector;
    for (std::size_t b = 0; b < k; ++b) {
      const Operator<CycloNumber> p = prods[a][b].get();
      if (a == b && !(p == fam.members[a].projector)) {
        idem = false;
        idem_detail += " z" + label(a);
      }
      if (a != b && !p.mat.is_zero()) {
        orth = false;
        orth_detail += " z" + label(a) + "z" + label(b);
      }
    }
  }
  out.add("idempotent", idem, idem ? "" : "fails for" + idem_detail);
  out.add("orthogonal", orth, orth ? "" : "nonzero products" + orth_detail);
  out.add("partition_of_unity", sum == identity_operator(ring, n, m2));

  bool comm = true;
  std::string comm_detail;
  for (int i = 1; i < n; ++i) {
    const Operator<CycloNumber> e = tl_generator(ring, n, i, m2);
    for (std::size_t a = 0; a < k; ++a) {
      if (!(fam.members[a].projector * e == e * fam.members[a].projector)) {
        comm = false;
        comm_detail += " z" + label(a) + "e" + std::to_string(i);
      }
    }
  }
  out.add("commutes", comm, comm_detail);

  bool tr = true;
  std::string tr_detail;
  for (std::size_t a = 0; a < k; ++a) {
    const CycloNumber t = fam.members[a].projector.mat.trace();
    const CycloNumber want(field, Rational(static_cast<long long>(fam.members[a].expected_rank)));
    if (!(t == want)) {
      tr = false;
      tr_detail += " z" + label(a) + ":" + t.to_string() + "!=" + std::to_string(fam.members[a].expected_rank);
    }
  }
  out.add("trace", tr, tr_detail);

  bool nil = true;
  std::string nil_detail;
  std::size_t nil_count = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const auto& nz = fam.members[a].nilpotent;
    if (!nz) continue;
    ++nil_count;
    auto fail = [&](const std::string& what) {
      nil = false;
      nil_detail += " n" + label(a) + ":" + what;
    };
    if (nz->mat.is_zero()) fail("zero");
    if (!(*nz * *nz).mat.is_zero()) fail("square");
    const auto& z = fam.members[a].projector;
    if (!(z * *nz == *nz) || !(*nz * z == *nz)) fail("own block");
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      const auto& zb = fam.members[b].projector;
      if (!(zb * *nz).mat.is_zero() || !(*nz * zb).mat.is_zero()) fail("other block " + label(b));
    }
  }
  out.add("nilpotent", nil, nil_detail);

  const std::size_t expected = static_cast<std::size_t>((n - m2) / 2 + 1);
  out.add("count", k + nil_count == expected,
          std::to_string(k) + " members + " + std::to_string(nil_count) + " nilpotents, expected " +
              std::to_string(expected));

  const WeightSpace w(n, m2);
  SpanBuilder<CycloNumber> span(CycloNumber(field, Rational(1)));
  auto flatten = [&](const Operator<CycloNumber>& op) {
    DenseVector<CycloNumber> v(w.dim() * w.dim(), CycloNumber(field, Rational(0)));
    for (std::size_t r = 0; r < op.rows(); ++r)
      for (const auto& [c, x] : op.mat.row(r)) v[r * w.dim() + c] = x;
    return v;
  };
  for (const auto& mem : fam.members) {
    span.add(flatten(mem.projector));
    if (mem.nilpotent) span.add(flatten(*mem.nilpotent));
  }
  out.add("independent", span.rank() == k + nil_count, "rank " + std::to_string(span.rank()));

  if (with_commutant) {
    const int dim = commutant_dimension_at_root(n, m2, root);
    out.add("commutant_dimension", static_cast<std::size_t>(dim) == span.rank(),
            "commutant " + std::to_string(dim) + ", family span " + std::to_string(span.rank()));
  }
  return out;
}

}  // namespace tlq
