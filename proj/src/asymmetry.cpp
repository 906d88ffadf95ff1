#include "magicstar/asymmetry.hpp"

#include <bit>

namespace magicstar {

SimpleSignMatrix simple_sign_matrix(const RootSystem& rs) {
  const int R = rs.spec.R;
  SimpleSignMatrix m;
  m.R = R;
  for (int i = 0; i < R; ++i) {
    m.neg_row[i] |= 1u << i;  // diagonal
    for (int j = i + 1; j < R; ++j) {
      Coords2 sum = coords2_add(rs.delta[i], rs.delta[j], rs.spec.N);
      if (rs.root_index(sum)) m.neg_row[i] |= 1u << j;
    }
  }
  return m;
}

int epsilon(const SimpleCoords& a, const SimpleCoords& b, const SimpleSignMatrix& m) {
  std::uint32_t fold = 0;
  for (int i = 0; i < m.R; ++i)
    if (a.m[i] & 1) fold ^= m.neg_row[i];
  std::uint32_t mb = 0;
  for (int j = 0; j < m.R; ++j)
    if (b.m[j] & 1) mb |= 1u << j;
  return std::popcount(fold & mb) & 1 ? -1 : 1;
}

EpsilonTable::EpsilonTable(const RootSystem& rs, const SimpleSignMatrix& m)
    : sign_(&m) {
  mask_.resize(rs.roots.size());
  fold_.resize(rs.roots.size());
  for (const auto& r : rs.roots) {
    std::uint32_t mask = 0, fold = 0;
    for (int i = 0; i < rs.spec.R; ++i)
      if (r.simple[i] & 1) {
        mask |= 1u << i;
        fold ^= m.neg_row[i];
      }
    mask_[r.index] = mask;
    fold_[r.index] = fold;
  }
}

std::uint32_t EpsilonTable::fold_mask(std::uint32_t oddBits) const {
  std::uint32_t fold = 0;
  for (int i = 0; i < sign_->R; ++i)
    if ((oddBits >> i) & 1) fold ^= sign_->neg_row[i];
  return fold;
}

}  // namespace magicstar
