#pragma once

#include <array>
#include <optional>
#include <vector>

#include "magicstar/algebra.hpp"

namespace magicstar {

struct Charge {
  int r = 0, s = 0;
  friend bool operator==(Charge a, Charge b) { return a.r == b.r && a.s == b.s; }
  friend bool operator!=(Charge a, Charge b) { return !(a == b); }
  Charge operator-() const { return {-r, -s}; }
  Charge operator+(Charge o) const { return {r + o.r, s + o.s}; }
};

inline Charge charge(const Root& root) { return {root.r, root.s}; }
Charge charge_of_coords(const Coords2& v);

// The six tip directions and the six one-dimensional outer points.
constexpr std::array<Charge, 6> kTipCharges = {
    {{0, 2}, {0, -2}, {1, 1}, {-1, -1}, {-1, 1}, {1, -1}}};
constexpr std::array<Charge, 6> kPointCharges = {
    {{2, 0}, {-2, 0}, {-1, 3}, {1, -3}, {-1, -3}, {1, 3}}};

bool is_tip_charge(Charge c);

struct grading_violation_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Partition of Phi by (r,s): a center, six tips, six singleton points.
struct MagicStarPartition {
  std::vector<int> center;
  std::array<std::vector<int>, 6> tips;    // parallel to kTipCharges
  std::array<int, 6> points;               // parallel to kPointCharges
  const std::vector<int>& tip(Charge c) const;
};

MagicStarPartition partition(const RootSystem& rs);

// g_III = g0 (+) C (+) T_axis (+) T_{-axis}. Grade-0 Cartans are the span
// of the center-root Cartans plus the axis line; dimension tallies are
// reported both with and without the extra C of the ambient algebra.
struct Grading3 {
  Charge axis;
  std::vector<int> center;      // grade-0 root indices
  std::vector<int> plus, minus; // grade +-1 root indices
  int cartan_dim;               // N-2 center directions plus the axis line
  int dim() const {
    return static_cast<int>(center.size() + plus.size() + minus.size()) + cartan_dim;
  }
};

Grading3 three_grading(const RootSystem& rs, Charge axis);

// Contact 5-grading along the (2,0) direction: grade of a root is its
// r-charge, g_{+-2} are the x_{+-rho} lines with rho = k_1 - k_2.
struct Grading5 {
  std::array<std::vector<int>, 5> grades;  // index g+2 -> grades[g+2]
  int rho_plus, rho_minus;                 // root indices of +-(k_1-k_2)
  const std::vector<int>& grade(int g) const { return grades[g + 2]; }
};

Grading5 five_grading(const RootSystem& rs);

// 3-linear product on a tip: (x,y,z) = [[x, zeta(y)], z] with zeta the
// Cartan involution. Supports must lie inside the tip.
Element triple_product_T(const Algebra& alg, Charge tip, const Element& x,
                         const Element& y, const Element& z);

// Coefficient of x_rho in [x,y] for x,y in g_1; any support outside
// span(x_rho) is a grading violation.
Rat symplectic_form(const Algebra& alg, const Grading5& g, const Element& x,
                    const Element& y);

// Fully symmetrized quartic form on g_1 (S_4 average of the nested
// bracket chain ending on x_{-rho}); result is the x_rho coefficient.
Rat quartic_form(const Algebra& alg, const Grading5& g, const Element& x1,
                 const Element& x2, const Element& x3, const Element& x4);

// Unsymmetrized diagonal chain [x,[x,[x,[x,x_{-rho}]]]].
Rat quartic_diagonal(const Algebra& alg, const Grading5& g, const Element& x);

// Exact rank of the symplectic Gram matrix over the g_1 generator basis.
int symplectic_gram_rank(const Algebra& alg, const Grading5& g);

// Rank of a rational matrix (row-major), exact Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rat>> m);

}  // namespace magicstar
