#include "magicstar/ht_pair.hpp"

#include <algorithm>

namespace magicstar {

HTPair::HTPair(const Algebra& alg, Charge vertex) : alg_(&alg), vertex_(vertex) {
  if (!is_tip_charge(vertex))
    throw std::invalid_argument("HT-pair vertex must be a tip charge");
  MagicStarPartition p = partition(alg.rs());
  plus_ = p.tip(vertex);
  minus_ = p.tip(-vertex);
  // The minus tip is the negation image of the plus tip, root by root.
  for (int idx : plus_)
    if (std::find(minus_.begin(), minus_.end(), alg.rs().roots[idx].neg) ==
        minus_.end())
      throw std::runtime_error("opposite tip is not the negation image");
}

int HTPair::side_of(const Element& x) const {
  if (x.algebra_id != alg_->id())
    throw instance_mismatch_error("element from another algebra instance");
  int side = 0;
  for (const auto& [b, c] : x.terms) {
    if (alg_->is_cartan(b)) throw side_error("Cartan support in a pair element");
    int r = alg_->root_of(b);
    int this_side;
    if (std::find(plus_.begin(), plus_.end(), r) != plus_.end()) this_side = 1;
    else if (std::find(minus_.begin(), minus_.end(), r) != minus_.end()) this_side = -1;
    else throw side_error("support outside the tip pair");
    if (side == 0) side = this_side;
    else if (side != this_side) throw side_error("mixed-side element");
  }
  return side;
}

Element HTPair::u_op(const Element& x, const Element& y) const {
  int sx = side_of(x), sy = side_of(y);
  if (sx != 0 && sy != 0 && sx == sy)
    throw side_error("U_x y needs x and y on opposite tips");
  return alg_->bracket(alg_->bracket(x, y), x) * Rat(1, 2);
}

Element HTPair::v_op(const Element& x, const Element& y, const Element& z) const {
  int sx = side_of(x), sy = side_of(y), sz = side_of(z);
  if ((sx != 0 && sy != 0 && sx == sy) || (sz != 0 && sy != 0 && sz == sy) ||
      (sx != 0 && sz != 0 && sx != sz))
    throw side_error("V_{x,y}z needs x,z on one tip and y opposite");
  Element out = alg_->bracket(alg_->bracket(x, y), z);
  out += alg_->bracket(alg_->bracket(z, y), x);
  return out * Rat(1, 2);
}

std::pair<Element, Element> HTPair::complete_idempotent(int rootIdx) const {
  if (std::find(plus_.begin(), plus_.end(), rootIdx) == plus_.end())
    throw std::invalid_argument("not a root of the plus tip");
  const Root& r = alg_->rs().roots[rootIdx];
  Rat norm = alg_->rs().inner_roots(rootIdx, rootIdx);
  Element x = alg_->gen(rootIdx);
  Element y = alg_->gen(r.neg) * (Rat(-2) / norm);
  if (!(u_op(x, y) == x) || !(u_op(y, x) == y))
    throw std::logic_error("completed pair fails the idempotent conditions");
  return {x, y};
}

}  // namespace magicstar
