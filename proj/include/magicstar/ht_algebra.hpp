#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "magicstar/magic_star.hpp"

namespace magicstar {

// Coefficients of an HT-element routed into the 3x3 Hermitian block
// layout: three scalars, an 8n vector, two 2^{4n-1} chiral spinors.
struct BlockMatrixView {
  Rat l1, l2, l3;
  std::vector<Rat> lv;       // 2(N-4) entries: chirality-major, mu-minor
  std::vector<Rat> ls_plus;  // spinor block, canonical root order
  std::vector<Rat> ls_minus;
};

// One star tip of an e8-family system packaged with its scalar roots
// rho_1, rho_2, rho_3, vector/spinor classification, the identity I and
// the opposite-tip involution element I^- = -x(-rho_1)-x(-rho_2)-x(-rho_3).
class HTAlgebra {
 public:
  HTAlgebra(const Algebra& alg, Charge vertex = {1, 1});

  const Algebra& alg() const { return *alg_; }
  Charge vertex() const { return vertex_; }
  const std::vector<int>& tip() const { return tip_; }
  int tip_size() const { return static_cast<int>(tip_.size()); }

  const std::array<int, 3>& scalars() const { return scalars_; }
  const std::vector<int>& spinors_plus() const { return spin_plus_; }
  const std::vector<int>& spinors_minus() const { return spin_minus_; }

  // Vector basis per the mu-indexing: x^sgn_{v mu}; mu = 0 is the twisted
  // k_{N-1} slot whose minus-chirality basis element is -x_{c - k_{N-1}}.
  int vector_mu_count() const { return alg_->spec().N - 4; }
  int vector_root(int mu, int chirality) const;  // chirality +1 / -1
  int vector_sign(int mu, int chirality) const;
  Element vector_basis(int mu, int chirality) const;

  const Element& identity() const { return I_; }
  const Element& i_minus() const { return Iminus_; }

  bool in_tip(int rootIdx) const { return tip_pos_.count(rootIdx) > 0; }
  int tip_pos(int rootIdx) const { return tip_pos_.at(rootIdx); }

  // x o y = 1/2 [[x, I^-], y]; the result is checked to stay inside T.
  Element circ(const Element& x, const Element& y) const;
  // Basis-level product of two tip generators, appended to `out`.
  void circ_basis(int rootA, int rootB, Terms& out) const;

  Rat trace(const Element& x) const;
  Rat trace_form(const Element& x, const Element& y) const;
  // tr(x_a o x_b) for tip generators; the hot path of the associativity scan.
  Rat trace_form_basis(int rootA, int rootB) const;

  Element sharp(const Element& x) const;
  // Both expressions of the cubic norm, checked to agree.
  Rat norm3(const Element& x) const;
  int rank(const Element& x) const;  // 0,1,2,3

  BlockMatrixView matrix_view(const Element& x) const;
  Element from_view(const BlockMatrixView& v) const;

  // Dense tr(x_a o x_b) table over tip generator pairs (row-major by tip
  // position); used by the exhaustive associativity scans at n <= 2.
  std::vector<Rat> trace_form_table() const;

 private:
  void check_in_tip(const Element& x) const;

  const Algebra* alg_;
  Charge vertex_;
  std::vector<int> tip_;
  std::array<int, 3> scalars_{};              // rho_1, rho_2, rho_3
  std::vector<int> vec_plus_, vec_minus_;     // by mu
  std::vector<int> spin_plus_, spin_minus_;
  std::unordered_map<int, int> tip_pos_;
  Element I_, Iminus_;
  std::array<int, 3> neg_scalars_{};          // -rho_i root indices
  // (rho_i, beta) for each tip generator beta, by tip position.
  std::array<std::vector<std::int8_t>, 3> scal_pairing_;
};

}  // namespace magicstar
