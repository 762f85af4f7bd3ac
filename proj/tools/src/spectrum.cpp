#include "spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "tlq/idempotent.hpp"
#include "tlq/render.hpp"
#include "tlq/rootlimit.hpp"
#include "tlq/spinrep.hpp"

namespace tlq::cli {

namespace {

using Mat = Eigen::MatrixXcd;

Mat dense(const Operator<cplx>& op) {
  Mat m = Mat::Zero(static_cast<Eigen::Index>(op.rows()), static_cast<Eigen::Index>(op.cols()));
  for (std::size_t r = 0; r < op.rows(); ++r)
    for (const auto& [c, x] : op.mat.row(r)) m(static_cast<Eigen::Index>(r), c) = x;
  return m;
}

Mat dense(const Operator<CycloNumber>& op) {
  Mat m = Mat::Zero(static_cast<Eigen::Index>(op.rows()), static_cast<Eigen::Index>(op.cols()));
  for (std::size_t r = 0; r < op.rows(); ++r)
    for (const auto& [c, x] : op.mat.row(r)) m(static_cast<Eigen::Index>(r), c) = x.to_complex();
  return m;
}

bool before(const cplx& a, const cplx& b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); }

std::vector<cplx> eigenvalues(const Mat& m) {
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end(), before);
  return out;
}

/// S_r = (S^-)^r (S^+)^r / [r]!^2 on W_m, for r = 0 .. n/2 - m.
std::vector<Mat> commutant_generators(int n, int m2, cplx v) {
  const ComplexScalars ring(v);
  const int top = (n - m2) / 2;
  const auto dim = static_cast<Eigen::Index>(WeightSpace(n, m2).dim());
  std::vector<Mat> out{Mat::Identity(dim, dim)};
  Mat up = Mat::Identity(dim, dim);
  Mat down = Mat::Identity(dim, dim);
  cplx fact = 1.0;
  for (int r = 1; r <= top; ++r) {
    up = dense(uq_splus(ring, n, m2 + 2 * (r - 1))) * up;
    down = down * dense(uq_sminus(ring, n, m2 + 2 * r));
    fact *= q_int(r).eval(v);
    out.push_back(down * up / (fact * fact));
  }
  return out;
}

void analyse(SpectrumReport& rep, const Mat& h, std::vector<SpectrumBlock> blocks, const std::vector<Mat>& proj) {
  const double hn = h.norm();
  const auto dim = h.rows();
  rep.spectrum = eigenvalues(h);

  bool comm_ok = true, dims_ok = true;
  std::string comm_detail, dims_detail;
  Mat sum = Mat::Zero(dim, dim);
  int total_rank = 0;
  std::vector<cplx> merged;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    SpectrumBlock& b = blocks[k];
    const Mat& p = proj[k];
    sum += p;
    const double pn = p.norm();
    b.commutator = (pn == 0.0 || hn == 0.0) ? 0.0 : (h * p - p * h).norm() / (hn * pn);
    if (b.commutator > kCommutatorTolerance) {
      comm_ok = false;
      comm_detail += " " + b.label;
    }
    Eigen::BDCSVD<Mat> svd(p, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index t = 0; t < sv.size(); ++t)
      if (sv(t) > 1e-6) ++rank;
    b.rank = rank;
    total_rank += rank;
    if (static_cast<unsigned long long>(rank) != b.expected_dim) {
      dims_ok = false;
      dims_detail += " " + b.label + ":" + std::to_string(rank) + "!=" + std::to_string(b.expected_dim);
    }
    const Mat u = svd.matrixU().leftCols(rank);
    const Mat hb = u.adjoint() * h * u;
    b.invariance = rank == 0 ? 0.0 : (h * u - u * hb).norm() / std::max(1.0, hn);
    b.eigenvalues = eigenvalues(hb);
    merged.insert(merged.end(), b.eigenvalues.begin(), b.eigenvalues.end());
  }
  rep.blocks = std::move(blocks);

  double scale = 1.0;
  for (const auto& x : rep.spectrum) scale = std::max(scale, std::abs(x));
  std::vector<bool> used(rep.spectrum.size(), false);
  bool matched = merged.size() == rep.spectrum.size();
  rep.match = 0.0;
  for (const auto& x : merged) {
    std::size_t best = rep.spectrum.size();
    double dist = 0.0;
    for (std::size_t t = 0; t < rep.spectrum.size(); ++t) {
      if (used[t]) continue;
      const double d = std::abs(x - rep.spectrum[t]);
      if (best == rep.spectrum.size() || d < dist) {
        best = t;
        dist = d;
      }
    }
    if (best == rep.spectrum.size()) {
      matched = false;
      break;
    }
    used[best] = true;
    rep.match = std::max(rep.match, dist / scale);
  }

  const double partition = (sum - Mat::Identity(dim, dim)).norm() / std::sqrt(static_cast<double>(std::max<Eigen::Index>(dim, 1)));
  char buf[64];
  rep.checks.add("commutator", comm_ok, comm_ok ? "" : "exceeds tolerance for" + comm_detail);
  rep.checks.add("block_dimensions", dims_ok, dims_detail);
  rep.checks.add("total_dimension", total_rank == dim, std::to_string(total_rank) + " vs " + std::to_string(dim));
  std::snprintf(buf, sizeof buf, "%.3g", partition);
  rep.checks.add("partition_of_unity", partition <= 1e-8, buf);
  std::snprintf(buf, sizeof buf, "%.3g", rep.match);
  rep.checks.add("spectrum_match", matched && rep.match <= rep.tolerance, matched ? buf : "eigenvalue counts differ");
}

std::string fmt_complex(cplx z) {
  auto clean = [](double x) { return std::abs(x) < 5e-11 ? 0.0 : x; };
  char buf[80];
  const double im = clean(z.imag());
  std::snprintf(buf, sizeof buf, "%.10f%+.10fi", clean(z.real()), im);
  return buf;
}

void check_range(int n, int m2) {
  if (n < 1 || n > desk_cap(kSpectrumMaxN))
    throw std::invalid_argument("spectrum: n must satisfy 1 <= n <= " + std::to_string(desk_cap(kSpectrumMaxN)));
  if (m2 < 0 || m2 > n || (n - m2) % 2 != 0) throw std::invalid_argument("spectrum: requires 0 <= m <= n/2 with matching parity");
}

}  // namespace

SpectrumReport block_spectrum(int n, int m2, cplx q, double tolerance) {
  check_range(n, m2);
  if (std::abs(q) == 0.0) throw std::invalid_argument("spectrum: q must be nonzero");
  SpectrumReport rep;
  rep.n = n;
  rep.m2 = m2;
  rep.q = q;
  rep.tolerance = tolerance;
  const cplx v = std::sqrt(q);
  const Mat h = dense(hamiltonian(ComplexScalars(v), n, m2));
  const std::vector<Mat> s = commutant_generators(n, m2, v);

  std::vector<SpectrumBlock> blocks;
  std::vector<Mat> proj;
  for (int j2 : admissible_j2(n, m2)) {
    Mat z = Mat::Zero(h.rows(), h.cols());
    for (int i = (j2 - m2) / 2; i <= (n - m2) / 2; ++i) z += coeff_a(i, j2, m2).eval(v) * s[static_cast<std::size_t>(i)];
    SpectrumBlock b;
    b.label = "V_" + half_label(j2);
    b.j2 = j2;
    b.expected_dim = gamma_multiplicity(n, j2);
    blocks.push_back(std::move(b));
    proj.push_back(std::move(z));
  }
  analyse(rep, h, std::move(blocks), proj);
  return rep;
}

SpectrumReport block_spectrum_at_root(int n, int m2, const RootSpec& root, double tolerance) {
  check_range(n, m2);
  SpectrumReport rep;
  rep.n = n;
  rep.m2 = m2;
  rep.q = root.q_value();
  rep.root = root;
  rep.tolerance = tolerance;
  const Mat h = dense(hamiltonian(ComplexScalars(root.v_value()), n, m2));
  const ProjectorFamily fam = projector_family(n, m2, root);
  std::vector<SpectrumBlock> blocks;
  std::vector<Mat> proj;
  for (const auto& mem : fam.members) {
    SpectrumBlock b;
    b.j2 = mem.j2;
    b.partner_j2 = mem.partner_j2;
    b.label = mem.kind == MemberKind::BoundPair ? "P_" + half_label(mem.partner_j2) : "V_" + half_label(mem.j2);
    b.expected_dim = mem.expected_rank;
    blocks.push_back(std::move(b));
    proj.push_back(dense(mem.projector));
  }
  analyse(rep, h, std::move(blocks), proj);
  return rep;
}

json spectrum_json(const SpectrumReport& r) {
  auto cj = [](cplx z) { return json::array({z.real(), z.imag()}); };
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    json ev = json::array();
    for (const auto& z : b.eigenvalues) ev.push_back(cj(z));
    blocks.push_back(json{{"block", b.label},
                          {"j", half_json(b.j2)},
                          {"partner_j", b.partner_j2 >= 0 ? half_json(b.partner_j2) : json(nullptr)},
                          {"expected_dim", b.expected_dim},
                          {"rank", b.rank},
                          {"commutator", b.commutator},
                          {"invariance", b.invariance},
                          {"eigenvalues", std::move(ev)}});
  }
  json full = json::array();
  for (const auto& z : r.spectrum) full.push_back(cj(z));
  return json{{"n", r.n},
              {"m", half_json(r.m2)},
              {"q", cj(r.q)},
              {"root", r.root ? json(*r.root) : json(nullptr)},
              {"tolerance", r.tolerance},
              {"blocks", std::move(blocks)},
              {"spectrum", std::move(full)},
              {"match", r.match},
              {"checks", json(r.checks)},
              {"ok", r.checks.ok()}};
}

std::string spectrum_text(const SpectrumReport& r) {
  std::ostringstream out;
  char buf[160];
  out << "n=" << r.n << " m=" << half_label(r.m2) << " q=" << fmt_complex(r.q);
  if (r.root) out << " (" << r.root->to_string() << ")";
  out << "\n";
  for (const auto& b : r.blocks) {
    std::snprintf(buf, sizeof buf, "block %-8s dim %-5llu rank %-5d [H,P] %.2e\n", b.label.c_str(), b.expected_dim, b.rank,
                  b.commutator);
    out << buf;
    for (const auto& z : b.eigenvalues) out << "  " << fmt_complex(z) << "\n";
  }
  std::snprintf(buf, sizeof buf, "blocks vs spectrum of H: %.2e (tolerance %.0e)\n", r.match, r.tolerance);
  out << buf;
  return out.str();
}

cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  static const std::string num = R"((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex frac(R"(([+-]?\d+)/(\d+))");
  static const std::regex real("([+-]?" + num + ")");
  static const std::regex imag("([+-]?)(" + num + ")?[ij]");
  static const std::regex both("([+-]?" + num + ")([+-])(" + num + ")?[ij]");
  std::smatch m;
  if (std::regex_match(s, m, frac)) {
    const double d = std::stod(m[2]);
    if (d == 0.0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    return {std::stod(m[1]) / d, 0.0};
  }
  if (std::regex_match(s, m, real)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(s, m, imag)) {
    const double y = m[2].matched ? std::stod(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -y : y};
  }
  if (std::regex_match(s, m, both)) {
    const double y = m[3].matched ? std::stod(m[3]) : 1.0;
    return {std::stod(m[1]), m[2] == "-" ? -y : y};
  }
  throw std::invalid_argument("cannot parse '" + raw + "' as a complex number");
}

}  // namespace tlq::cli
