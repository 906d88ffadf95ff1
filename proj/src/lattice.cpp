#include "magicstar/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace magicstar {

std::string family_name(Family f) {
  switch (f) {
    case Family::E6: return "e6";
    case Family::E7: return "e7";
    case Family::E8: return "e8";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "e6" || s == "E6") return Family::E6;
  if (s == "e7" || s == "E7") return Family::E7;
  if (s == "e8" || s == "E8") return Family::E8;
  throw std::invalid_argument("unknown family: " + s);
}

AlgebraSpec make_spec(Family family, int n) {
  if (n < 1) throw std::invalid_argument("level n must be >= 1");
  int N = 4 * (n + 1);
  if (N > kMaxN) throw std::invalid_argument("level n too large for this build");
  int R = 0;
  switch (family) {
    case Family::E6: R = N - 2; break;
    case Family::E7: R = N - 1; break;
    case Family::E8: R = N; break;
  }
  return AlgebraSpec{family, n, N, R};
}

Coords2 coords2_add(const Coords2& a, const Coords2& b, int N) {
  Coords2 out{};
  for (int i = 0; i < N; ++i) out[i] = static_cast<std::int8_t>(a[i] + b[i]);
  return out;
}

Coords2 coords2_neg(const Coords2& a, int N) {
  Coords2 out{};
  for (int i = 0; i < N; ++i) out[i] = static_cast<std::int8_t>(-a[i]);
  return out;
}

std::string coords2_str(const Coords2& a, int N) {
  // Doubled coordinates, e.g. (2,-2,0,...)/2.
  std::string s = "(";
  for (int i = 0; i < N; ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")/2";
}

Rat inner(const Coords2& a, const Coords2& b, int N) {
  long long dot = 0;
  for (int i = 0; i < N; ++i) dot += static_cast<long long>(a[i]) * b[i];
  return Rat(dot, 4);
}

std::vector<Coords2> simple_roots(const AlgebraSpec& spec) {
  const int N = spec.N, R = spec.R;
  std::vector<Coords2> delta(R);
  for (int i = 0; i + 2 < R; ++i) {  // alpha_i = k_i - k_{i+1}
    delta[i][i] = 2;
    delta[i][i + 1] = -2;
  }
  delta[R - 2][R - 3] = 2;  // alpha_{R-1} = k_{R-2} + k_{R-1}
  delta[R - 2][R - 2] = 2;
  for (int i = 0; i < N; ++i) delta[R - 1][i] = -1;  // -(k_1+...+k_N)/2
  return delta;
}

CellCounts cell_counts(const AlgebraSpec& spec) {
  const long long N = spec.N;
  switch (spec.family) {
    case Family::E8:
      return {1, (2 * N - 5) + (1LL << (N - 4)), 2 * (N - 3) * (N - 4) + (1LL << (N - 3))};
    case Family::E6:
      return {1, (2 * N - 11) + (1LL << (N - 6)), 2 * (N - 6) * (N - 7) + (1LL << (N - 5))};
    default:
      throw std::invalid_argument("no enumeration table for e7");
  }
}

namespace {

std::uint64_t pack_key(const Coords2& v, int N) {
  std::uint64_t key = 0;
  for (int i = 0; i < N; ++i) {
    int c = v[i] + 2;
    if (c < 0 || c > 4) return ~0ULL;  // out of root range, cannot be a root
    key |= static_cast<std::uint64_t>(c) << (3 * i);
  }
  return key;
}

std::pair<int, int> charge_of(const Coords2& v) {
  return {(v[0] - v[1]) / 2, (v[0] + v[1] - 2 * v[2]) / 2};
}

// Canonical cell order: table row order, +-pairs adjacent.
constexpr std::array<std::pair<int, int>, 13> kCellOrder = {{
    {2, 0}, {-2, 0}, {-1, 3}, {1, -3}, {-1, -3}, {1, 3},
    {0, 0}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}, {-1, 1}, {1, -1},
}};

int cell_rank(std::pair<int, int> c) {
  for (std::size_t i = 0; i < kCellOrder.size(); ++i)
    if (kCellOrder[i] == c) return static_cast<int>(i);
  return -1;
}

}  // namespace

RootSystem enumerate_roots(const AlgebraSpec& spec) {
  if (spec.family == Family::E7)
    throw std::invalid_argument(
        "e7^(n) has no standalone enumeration; realize it as the 3-graded "
        "subalgebra g_III of e8^(n) along a tip axis");
  const int N = spec.N;
  const int support = spec.family == Family::E8 ? N : N - 3;

  std::vector<Coords2> raw;
  // Orthogonal roots +-k_i +- k_j on the allowed support.
  for (int i = 0; i < support; ++i)
    for (int j = i + 1; j < support; ++j)
      for (int si = -2; si <= 2; si += 4)
        for (int sj = -2; sj <= 2; sj += 4) {
          Coords2 v{};
          v[i] = static_cast<std::int8_t>(si);
          v[j] = static_cast<std::int8_t>(sj);
          raw.push_back(v);
        }
  // Spinor roots: half-integer vectors lying in the lattice. Membership is
  // the parity of the + signs, with the E6 u-block counting as one slot.
  if (spec.family == Family::E8) {
    for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      Coords2 v{};
      for (int i = 0; i < N; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
      raw.push_back(v);
    }
  } else {
    const int F = N - 3;
    for (std::uint32_t mask = 0; mask < (1u << F); ++mask)
      for (int u = -1; u <= 1; u += 2) {
        if ((std::popcount(mask) + (u > 0 ? 1 : 0)) % 2 != 0) continue;
        Coords2 v{};
        for (int i = 0; i < F; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
        for (int i = F; i < N; ++i) v[i] = static_cast<std::int8_t>(u);
        raw.push_back(v);
      }
  }

  // Bucket by (r,s) cell, lexicographic inside each cell.
  std::array<std::vector<Coords2>, 13> cells;
  for (const auto& v : raw) {
    int rank = cell_rank(charge_of(v));
    if (rank < 0) throw std::runtime_error("root with unexpected (r,s) charge");
    cells[rank].push_back(v);
  }
  const CellCounts want = cell_counts(spec);
  for (int c = 0; c < 13; ++c) {
    std::sort(cells[c].begin(), cells[c].end());
    long long expect = c < 6 ? want.point : (c == 6 ? want.center : want.tip);
    if (static_cast<long long>(cells[c].size()) != expect)
      throw std::runtime_error("cell count mismatch against enumeration table");
  }

  RootSystem rs;
  rs.spec = spec;
  rs.delta = simple_roots(spec);
  for (const auto& cell : cells)
    for (const auto& v : cell) {
      Root r;
      r.coords2 = v;
      r.kind = (v[0] % 2 != 0) ? RootKind::Spinor : RootKind::Orthogonal;
      r.index = static_cast<int>(rs.roots.size());
      auto [cr, cs] = charge_of(v);
      r.r = static_cast<std::int8_t>(cr);
      r.s = static_cast<std::int8_t>(cs);
      rs.roots.push_back(r);
    }

  rs.build_lookup();
  rs.build_solver();
  rs.decompose_all();

  rs.delta_index.resize(spec.R);
  for (int i = 0; i < spec.R; ++i) {
    auto idx = rs.root_index(rs.delta[i]);
    if (!idx) throw std::runtime_error("simple root missing from Phi");
    rs.delta_index[i] = *idx;
  }
  return rs;
}

void RootSystem::build_lookup() {
  const int N = spec.N;
  lookup_.reserve(roots.size() * 2);
  spinor_by_mask_.assign(1u << N, -1);
  for (const auto& r : roots) {
    lookup_.emplace(pack_key(r.coords2, N), r.index);
    if (r.kind == RootKind::Spinor) {
      std::uint32_t mask = 0;
      for (int i = 0; i < N; ++i)
        if (r.coords2[i] > 0) mask |= 1u << i;
      spinor_by_mask_[mask] = r.index;
    }
  }
  for (auto& r : roots) {
    auto neg = root_index(coords2_neg(r.coords2, N));
    if (!neg) throw std::runtime_error("Phi not closed under negation");
    r.neg = *neg;
  }
}

std::optional<int> RootSystem::root_index(const Coords2& v) const {
  const int N = spec.N;
  // Spinor fast path: every entry +-1.
  std::uint32_t mask = 0;
  bool spinor = true;
  for (int i = 0; i < N; ++i) {
    if (v[i] == 1) mask |= 1u << i;
    else if (v[i] != -1) { spinor = false; break; }
  }
  if (spinor) {
    int idx = spinor_by_mask_[mask];
    if (idx < 0) return std::nullopt;
    return idx;
  }
  std::uint64_t key = pack_key(v, N);
  if (key == ~0ULL) return std::nullopt;
  auto it = lookup_.find(key);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void RootSystem::build_solver() {
  const int N = spec.N, R = spec.R;
  // Pick R independent rows of the N x R simple-root matrix.
  std::vector<std::vector<Rat>> work(N, std::vector<Rat>(R));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < R; ++j) work[i][j] = Rat(delta[j][i]);
  std::vector<bool> used(N, false);
  pivot_rows_.clear();
  for (int col = 0; col < R; ++col) {
    int piv = -1;
    for (int i = 0; i < N; ++i)
      if (!used[i] && !work[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) throw std::runtime_error("simple roots not independent");
    used[piv] = true;
    pivot_rows_.push_back(piv);
    for (int i = 0; i < N; ++i) {
      if (i == piv || work[i][col].is_zero()) continue;
      Rat f = work[i][col] / work[piv][col];
      for (int j = col; j < R; ++j) work[i][j] -= f * work[piv][j];
    }
  }
  std::sort(pivot_rows_.begin(), pivot_rows_.end());

  // Invert the RxR pivot submatrix by Gauss-Jordan.
  std::vector<std::vector<Rat>> m(R, std::vector<Rat>(2 * R));
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < R; ++j) m[i][j] = Rat(delta[j][pivot_rows_[i]]);
    m[i][R + i] = Rat(1);
  }
  for (int col = 0; col < R; ++col) {
    int piv = -1;
    for (int i = col; i < R; ++i)
      if (!m[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) throw std::runtime_error("singular pivot submatrix");
    std::swap(m[col], m[piv]);
    Rat d = m[col][col];
    for (int j = 0; j < 2 * R; ++j) m[col][j] /= d;
    for (int i = 0; i < R; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rat f = m[i][col];
      for (int j = 0; j < 2 * R; ++j) m[i][j] -= f * m[col][j];
    }
  }
  solver_inv_.assign(static_cast<std::size_t>(R) * R, Rat());
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j)
      solver_inv_[static_cast<std::size_t>(i) * R + j] = m[i][R + j];
}

SimpleCoords RootSystem::decompose(const Coords2& v) const {
  const int N = spec.N, R = spec.R;
  std::vector<Rat> m(R);
  for (int i = 0; i < R; ++i) {
    Rat acc;
    for (int k = 0; k < R; ++k)
      acc += solver_inv_[static_cast<std::size_t>(i) * R + k] * Rat(v[pivot_rows_[k]]);
    m[i] = acc;
  }
  // Span check on the full N rows.
  for (int i = 0; i < N; ++i) {
    Rat acc;
    for (int j = 0; j < R; ++j) acc += m[j] * Rat(delta[j][i]);
    if (acc != Rat(v[i])) throw span_error("vector outside the span of Delta");
  }
  SimpleCoords out;
  out.m.resize(R);
  for (int i = 0; i < R; ++i) {
    if (!m[i].is_integer())
      throw not_in_lattice_error("vector not in the root lattice");
    out.m[i] = m[i].num();
  }
  return out;
}

Coords2 RootSystem::recompose(const SimpleCoords& c) const {
  const int N = spec.N, R = spec.R;
  Coords2 out{};
  for (int j = 0; j < R; ++j)
    for (int i = 0; i < N; ++i)
      out[i] = static_cast<std::int8_t>(out[i] + c.m[j] * delta[j][i]);
  return out;
}

void RootSystem::decompose_all() {
  const int R = spec.R;
  cartan_pairing_.assign(roots.size() * R, 0);
  for (auto& r : roots) {
    SimpleCoords c = decompose(r.coords2);
    for (int i = 0; i < R; ++i) r.simple[i] = static_cast<std::int16_t>(c.m[i]);
    for (int i = 0; i < R; ++i) {
      Rat p = inner(r.coords2, delta[i], spec.N);
      if (!p.is_integer()) throw std::runtime_error("non-integral Cartan pairing");
      cartan_pairing_[static_cast<std::size_t>(r.index) * R + i] =
          static_cast<std::int8_t>(p.num());
    }
  }
}

}  // namespace magicstar
