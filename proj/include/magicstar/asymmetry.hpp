#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "magicstar/lattice.hpp"

namespace magicstar {

// eps(alpha_i, alpha_j) on the ordered simple roots: -1 on the diagonal,
// -1 when alpha_i + alpha_j is a root and i < j, +1 otherwise.
struct SimpleSignMatrix {
  int R = 0;
  // Bit j of neg_row[i] set means eps(alpha_i, alpha_j) = -1.
  std::array<std::uint32_t, kMaxR> neg_row{};

  int eps(int i, int j) const { return (neg_row[i] >> j) & 1 ? -1 : 1; }
};

SimpleSignMatrix simple_sign_matrix(const RootSystem& rs);

// The asymmetry function on the lattice, evaluated as a parity sum: only
// the mod-2 classes of the coefficients matter.
int epsilon(const SimpleCoords& a, const SimpleCoords& b, const SimpleSignMatrix& m);

// O(1) evaluation on root pairs via per-root fold/parity masks.
class EpsilonTable {
 public:
  EpsilonTable() = default;
  EpsilonTable(const RootSystem& rs, const SimpleSignMatrix& m);

  int eps(int rootA, int rootB) const {
    return std::popcount(fold_[rootA] & mask_[rootB]) & 1 ? -1 : 1;
  }
  std::uint32_t mask(int root) const { return mask_[root]; }
  std::uint32_t fold_mask(std::uint32_t oddBits) const;

 private:
  const SimpleSignMatrix* sign_ = nullptr;
  std::vector<std::uint32_t> mask_;  // coefficient parities on Delta
  std::vector<std::uint32_t> fold_;  // XOR of neg rows at odd coefficients
};

}  // namespace magicstar
