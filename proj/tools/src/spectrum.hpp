#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tlq/cyclotomic.hpp"
#include "tlq/json_io.hpp"
#include "tlq/report.hpp"

namespace tlq::cli {

using cplx = std::complex<double>;

struct SpectrumBlock {
  std::string label;
  int j2 = 0;
  int partner_j2 = -1;
  unsigned long long expected_dim = 0;
  int rank = 0;
  double commutator = 0.0;  ///< ||[H, P]|| / (||H|| ||P||), Frobenius norms
  double invariance = 0.0;  ///< ||H U - U (U^* H U)|| for an orthonormal basis U of the block
  std::vector<cplx> eigenvalues;
};

struct SpectrumReport {
  int n = 0;
  int m2 = 0;
  cplx q;
  std::optional<RootSpec> root;
  double tolerance = 1e-8;
  std::vector<SpectrumBlock> blocks;
  std::vector<cplx> spectrum;  ///< eigenvalues of H on W_m
  double match = 0.0;          ///< largest distance in the block-to-full matching, relative
  CheckList checks;
};

inline constexpr int kSpectrumMaxN = 14;
inline constexpr double kCommutatorTolerance = 1e-9;

/// H = sum e_i on W_m at numeric q, split by the generic idempotents z_{j,m}.
SpectrumReport block_spectrum(int n, int m2, cplx q, double tolerance = 1e-8);

/// Same with the exact root-of-unity projector family evaluated numerically.
SpectrumReport block_spectrum_at_root(int n, int m2, const RootSpec& root, double tolerance = 1e-5);

json spectrum_json(const SpectrumReport& r);
std::string spectrum_text(const SpectrumReport& r);

/// "0.7+0.3i", "-1.5i", "2", "3/2".
cplx parse_complex(const std::string& s);

}  // namespace tlq::cli
