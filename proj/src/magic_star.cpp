#include "magicstar/magic_star.hpp"

#include <algorithm>

namespace magicstar {

Charge charge_of_coords(const Coords2& v) {
  return {(v[0] - v[1]) / 2, (v[0] + v[1] - 2 * v[2]) / 2};
}

bool is_tip_charge(Charge c) {
  return std::find(kTipCharges.begin(), kTipCharges.end(), c) != kTipCharges.end();
}

const std::vector<int>& MagicStarPartition::tip(Charge c) const {
  for (std::size_t i = 0; i < kTipCharges.size(); ++i)
    if (kTipCharges[i] == c) return tips[i];
  throw std::invalid_argument("not a tip charge");
}

MagicStarPartition partition(const RootSystem& rs) {
  if (rs.spec.family == Family::E7)
    throw std::invalid_argument("partition: E6 or E8 system required");
  MagicStarPartition p;
  p.points.fill(-1);
  for (const auto& root : rs.roots) {
    Charge c = charge(root);
    if (c == Charge{0, 0}) {
      p.center.push_back(root.index);
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i < kTipCharges.size(); ++i)
      if (kTipCharges[i] == c) {
        p.tips[i].push_back(root.index);
        placed = true;
        break;
      }
    if (placed) continue;
    for (std::size_t i = 0; i < kPointCharges.size(); ++i)
      if (kPointCharges[i] == c) {
        if (p.points[i] != -1)
          throw std::runtime_error("point cell not a singleton");
        p.points[i] = root.index;
        placed = true;
        break;
      }
    if (!placed) throw std::runtime_error("root with charge outside the star");
  }
  const CellCounts want = cell_counts(rs.spec);
  if (static_cast<long long>(p.center.size()) != want.center)
    throw std::runtime_error("center cardinality mismatch");
  for (const auto& t : p.tips)
    if (static_cast<long long>(t.size()) != want.tip)
      throw std::runtime_error("tip cardinality mismatch");
  for (int idx : p.points)
    if (idx < 0) throw std::runtime_error("missing point cell");
  return p;
}

Grading3 three_grading(const RootSystem& rs, Charge axis) {
  if (!is_tip_charge(axis)) throw std::invalid_argument("invalid 3-grading axis");
  MagicStarPartition p = partition(rs);
  Grading3 g;
  g.axis = axis;
  g.center = p.center;
  g.plus = p.tip(axis);
  g.minus = p.tip(-axis);
  g.cartan_dim = rs.spec.N - 2 + 1;
  return g;
}

Grading5 five_grading(const RootSystem& rs) {
  partition(rs);  // validates cell cardinalities before grading by r
  Grading5 g;
  for (const auto& root : rs.roots) g.grades[root.r + 2].push_back(root.index);
  Coords2 rho{};
  rho[0] = 2;
  rho[1] = -2;
  g.rho_plus = *rs.root_index(rho);
  g.rho_minus = rs.roots[g.rho_plus].neg;
  if (g.grade(2).size() != 1 || g.grade(-2).size() != 1)
    throw std::runtime_error("5-grading extremes not one-dimensional");
  return g;
}

namespace {

void check_support_in(const Algebra& alg, const Element& x,
                      const std::vector<int>& roots, const char* what) {
  for (const auto& [b, c] : x.terms) {
    if (alg.is_cartan(b) ||
        std::find(roots.begin(), roots.end(), alg.root_of(b)) == roots.end())
      throw std::invalid_argument(std::string("support outside ") + what);
  }
}

}  // namespace

Element triple_product_T(const Algebra& alg, Charge tip, const Element& x,
                         const Element& y, const Element& z) {
  MagicStarPartition p = partition(alg.rs());
  const auto& t = p.tip(tip);
  check_support_in(alg, x, t, "tip");
  check_support_in(alg, y, t, "tip");
  check_support_in(alg, z, t, "tip");
  return alg.bracket(alg.bracket(x, alg.involution(y)), z);
}

Rat symplectic_form(const Algebra& alg, const Grading5& g, const Element& x,
                    const Element& y) {
  check_support_in(alg, x, g.grade(1), "g_1");
  check_support_in(alg, y, g.grade(1), "g_1");
  Element b = alg.bracket(x, y);
  Rat out;
  for (const auto& [bi, c] : b.terms) {
    if (bi == alg.gen_index(g.rho_plus)) out = c;
    else throw grading_violation_error("[g_1,g_1] has support outside span(x_rho)");
  }
  return out;
}

namespace {

Rat chain(const Algebra& alg, const Grading5& g,
          const std::array<const Element*, 4>& xs) {
  Element acc = alg.gen(g.rho_minus);
  for (int i = 3; i >= 0; --i) acc = alg.bracket(*xs[i], acc);
  Rat out;
  for (const auto& [bi, c] : acc.terms) {
    if (bi == alg.gen_index(g.rho_plus)) out = c;
    else throw grading_violation_error("quartic chain left the g_2 line");
  }
  return out;
}

}  // namespace

Rat quartic_diagonal(const Algebra& alg, const Grading5& g, const Element& x) {
  check_support_in(alg, x, g.grade(1), "g_1");
  return chain(alg, g, {&x, &x, &x, &x});
}

Rat quartic_form(const Algebra& alg, const Grading5& g, const Element& x1,
                 const Element& x2, const Element& x3, const Element& x4) {
  for (const Element* e : {&x1, &x2, &x3, &x4})
    check_support_in(alg, *e, g.grade(1), "g_1");
  std::array<const Element*, 4> base = {&x1, &x2, &x3, &x4};
  std::array<int, 4> perm = {0, 1, 2, 3};
  Rat sum;
  do {
    sum += chain(alg, g, {base[perm[0]], base[perm[1]], base[perm[2]], base[perm[3]]});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / Rat(24);
}

int matrix_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!m[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      Rat f = m[i][col] / m[rank][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

int symplectic_gram_rank(const Algebra& alg, const Grading5& g) {
  const auto& basis = g.grade(1);
  const int d = static_cast<int>(basis.size());
  std::vector<std::vector<Rat>> gram(d, std::vector<Rat>(d));
  Terms buf;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      buf.clear();
      alg.bracket_basis(alg.gen_index(basis[i]), alg.gen_index(basis[j]), buf);
      for (const auto& [b, c] : buf) {
        if (b == alg.gen_index(g.rho_plus)) gram[i][j] = c;
        else throw grading_violation_error("[g_1,g_1] outside span(x_rho)");
      }
    }
  return matrix_rank(std::move(gram));
}

}  // namespace magicstar
