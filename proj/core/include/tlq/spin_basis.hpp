#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tlq {

/// Largest chain length for which explicit weight-space bases are built.
inline constexpr int kMaxBasisSites = 24;

/**
 * Basis of the weight space W_m inside (C^2)^{\otimes n}.
 *
 * A state is a bitmask whose bit (n - i) is set when site i (1-based) carries
 * a down spin, so increasing integer order is lexicographic order with + before -.
 */
class WeightSpace {
 public:
  WeightSpace(int n, int m2);

  int n() const { return n_; }
  int m2() const { return m2_; }
  /// Number of down spins, n/2 - m.
  int downs() const { return downs_; }
  std::size_t dim() const { return states_.size(); }
  std::uint32_t state(std::size_t idx) const { return states_[idx]; }
  const std::vector<std::uint32_t>& states() const { return states_; }
  /// Index of a state, or -1 when the state is not in this weight space.
  long index_of(std::uint32_t s) const;

  /// +1 or -1 for the spin at 1-based site i.
  int spin(std::uint32_t s, int site) const { return (s >> (n_ - site)) & 1u ? -1 : 1; }
  std::uint32_t site_bit(int site) const { return 1u << (n_ - site); }
  std::string label(std::uint32_t s) const;

  /// True when (n, m2) describe a nonempty weight space.
  static bool valid(int n, int m2);

 private:
  int n_;
  int m2_;
  int downs_;
  std::vector<std::uint32_t> states_;
  std::unordered_map<std::uint32_t, std::uint32_t> index_;
};

/// dim W_m = binom(n, n/2 - m), as an exact integer for n up to 62.
unsigned long long weight_space_dim(int n, int m2);

/// Multiplicity of the spin-j irreducible in (C^2)^{\otimes n}: binom(n, n/2-j) - binom(n, n/2-j-1).
unsigned long long gamma_multiplicity(int n, int j2);

/// binom(n, k) with 0 outside 0 <= k <= n.
unsigned long long binom_u64(int n, int k);

}  // namespace tlq
