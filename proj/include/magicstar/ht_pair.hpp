#pragma once

#include <utility>

#include "magicstar/magic_star.hpp"

namespace magicstar {

struct side_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The pair (T^+, T^-) of opposite star tips, with the quadratic operators
// U_x y = 1/2 [[x,y],x] and their linearization V.
class HTPair {
 public:
  HTPair(const Algebra& alg, Charge vertex = {1, 1});

  const Algebra& alg() const { return *alg_; }
  Charge vertex() const { return vertex_; }
  const std::vector<int>& plus_tip() const { return plus_; }
  const std::vector<int>& minus_tip() const { return minus_; }

  // +1 if the support lies in T^+, -1 for T^-; throws on mixed or
  // out-of-pair support. Zero elements are side-neutral (returns 0).
  int side_of(const Element& x) const;

  // U_x y = 1/2 [[x,y],x]; x and y must live on opposite tips.
  Element u_op(const Element& x, const Element& y) const;

  // V_{x,y} z = 1/2 ([[x,y],z] + [[z,y],x]); x,z on one tip, y opposite.
  Element v_op(const Element& x, const Element& y, const Element& z) const;

  // Completes the rank-1 generator x_alpha to the pair idempotent
  // (x_alpha, -2/(alpha,alpha) x_{-alpha}); both conditions U_x y = x and
  // U_y x = y are verified before returning.
  std::pair<Element, Element> complete_idempotent(int rootIdx) const;

 private:
  const Algebra* alg_;
  Charge vertex_;
  std::vector<int> plus_, minus_;
};

}  // namespace magicstar
