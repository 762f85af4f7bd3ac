#include "tlq/spin_basis.hpp"

#include <stdexcept>

namespace tlq {

bool WeightSpace::valid(int n, int m2) {
  if (n < 0) return false;
  if (((n - m2) % 2 + 2) % 2 != 0) return false;
  return m2 >= -n && m2 <= n;
}

WeightSpace::WeightSpace(int n, int m2) : n_(n), m2_(m2) {
  if (n < 1 || n > kMaxBasisSites) throw std::invalid_argument("WeightSpace: n must be in 1.." + std::to_string(kMaxBasisSites));
  if (!valid(n, m2)) throw std::invalid_argument("WeightSpace: 2m must have the parity of n and |m| <= n/2");
  downs_ = (n - m2) / 2;
  // enumerate n-bit masks with `downs_` bits set in increasing order (Gosper's hack)
  if (downs_ == 0) {
    states_.push_back(0);
  } else {
    std::uint64_t s = (1ull << downs_) - 1;
    const std::uint64_t limit = 1ull << n;
    while (s < limit) {
      states_.push_back(static_cast<std::uint32_t>(s));
      std::uint64_t c = s & (~s + 1);
      std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], static_cast<std::uint32_t>(i));
}

long WeightSpace::index_of(std::uint32_t s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::string WeightSpace::label(std::uint32_t s) const {
  std::string out;
  for (int i = 1; i <= n_; ++i) out += spin(s, i) > 0 ? '+' : '-';
  return out;
}

unsigned long long binom_u64(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<unsigned>(n - k + t) / static_cast<unsigned>(t);
  return static_cast<unsigned long long>(r);
}

unsigned long long weight_space_dim(int n, int m2) {
  if (!WeightSpace::valid(n, m2)) return 0;
  return binom_u64(n, (n - m2) / 2);
}

unsigned long long gamma_multiplicity(int n, int j2) {
  if (j2 < 0 || !WeightSpace::valid(n, j2)) return 0;
  const int k = (n - j2) / 2;
  return binom_u64(n, k) - binom_u64(n, k - 1);
}

}  // namespace tlq
