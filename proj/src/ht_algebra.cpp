#include "magicstar/ht_algebra.hpp"

#include <algorithm>

namespace magicstar {

HTAlgebra::HTAlgebra(const Algebra& alg, Charge vertex)
    : alg_(&alg), vertex_(vertex) {
  if (alg.spec().family != Family::E8)
    throw std::invalid_argument(
        "HT-algebras are built on the e8 family; e6/e7 tips arise as "
        "restrictions");
  if (!is_tip_charge(vertex))
    throw std::invalid_argument("HT vertex must be one of the six tip charges");

  const int N = alg.spec().N;
  MagicStarPartition p = partition(alg.rs());
  tip_ = p.tip(vertex);
  for (std::size_t i = 0; i < tip_.size(); ++i)
    tip_pos_[tip_[i]] = static_cast<int>(i);

  const int M = N - 4;  // vector mu slots
  vec_plus_.assign(M, -1);
  vec_minus_.assign(M, -1);
  int rho3 = -1, rho1 = -1, rho2 = -1;
  for (int idx : tip_) {
    const Root& r = alg.rs().roots[idx];
    if (r.kind == RootKind::Spinor) {
      (r.coords2[N - 1] > 0 ? spin_plus_ : spin_minus_).push_back(idx);
      continue;
    }
    int far = -1;  // support column outside {k_1,k_2,k_3}
    for (int i = 3; i < N; ++i)
      if (r.coords2[i] != 0) { far = i; break; }
    if (far < 0) {
      rho3 = idx;
    } else if (far == N - 1) {
      (r.coords2[N - 1] > 0 ? rho1 : rho2) = idx;
    } else {
      int mu = far == N - 2 ? 0 : far - 2;
      (r.coords2[far] > 0 ? vec_plus_ : vec_minus_)[mu] = idx;
    }
  }
  if (rho1 < 0 || rho2 < 0 || rho3 < 0)
    throw std::runtime_error("tip scalar roots not found");
  scalars_ = {rho1, rho2, rho3};
  for (int mu = 0; mu < M; ++mu)
    if (vec_plus_[mu] < 0 || vec_minus_[mu] < 0)
      throw std::runtime_error("tip vector slot not paired");
  if (static_cast<int>(spin_plus_.size()) != (1 << (N - 5)) ||
      static_cast<int>(spin_minus_.size()) != (1 << (N - 5)))
    throw std::runtime_error("tip spinor chirality split has wrong size");

  I_ = alg.zero();
  Iminus_ = alg.zero();
  for (int i = 0; i < 3; ++i) {
    neg_scalars_[i] = alg.rs().roots[scalars_[i]].neg;
    I_ += alg.gen(scalars_[i]);
    Iminus_ -= alg.gen(neg_scalars_[i]);
  }

  for (int i = 0; i < 3; ++i) {
    scal_pairing_[i].resize(tip_.size());
    for (std::size_t t = 0; t < tip_.size(); ++t) {
      Rat ip = alg.rs().inner_roots(scalars_[i], tip_[t]);
      scal_pairing_[i][t] = static_cast<std::int8_t>(ip.num());
    }
  }
}

int HTAlgebra::vector_root(int mu, int chirality) const {
  return chirality > 0 ? vec_plus_[mu] : vec_minus_[mu];
}

int HTAlgebra::vector_sign(int mu, int chirality) const {
  return (mu == 0 && chirality < 0) ? -1 : 1;
}

Element HTAlgebra::vector_basis(int mu, int chirality) const {
  return alg_->gen(vector_root(mu, chirality)) * Rat(vector_sign(mu, chirality));
}

void HTAlgebra::check_in_tip(const Element& x) const {
  if (x.algebra_id != alg_->id())
    throw instance_mismatch_error("element from another algebra instance");
  for (const auto& [b, c] : x.terms)
    if (alg_->is_cartan(b) || !in_tip(alg_->root_of(b)))
      throw std::invalid_argument("support outside the HT tip");
}

void HTAlgebra::circ_basis(int rootA, int rootB, Terms& out) const {
  const auto& rs = alg_->rs();
  const int N = alg_->spec().N;
  const Root& ra = rs.roots[rootA];
  const int posB = tip_pos_.at(rootB);
  for (int i = 0; i < 3; ++i) {
    if (rootA == scalars_[i]) {
      // [x_{rho_i}, -x_{-rho_i}] = h_{rho_i}; then 1/2 [h, x_b].
      int pair = scal_pairing_[i][posB];
      if (pair != 0) out.emplace_back(alg_->gen_index(rootB), Rat(pair, 2));
      continue;
    }
    Coords2 mid = coords2_add(ra.coords2, rs.roots[neg_scalars_[i]].coords2, N);
    auto midIdx = rs.root_index(mid);
    if (!midIdx) continue;
    int w = -alg_->eps(rootA, neg_scalars_[i]);
    Coords2 res = coords2_add(mid, rs.roots[rootB].coords2, N);
    auto resIdx = rs.root_index(res);
    if (!resIdx) continue;
    out.emplace_back(alg_->gen_index(*resIdx),
                     Rat(w * alg_->eps(*midIdx, rootB), 2));
  }
}

Element HTAlgebra::circ(const Element& x, const Element& y) const {
  check_in_tip(x);
  check_in_tip(y);
  Element out = alg_->zero();
  Terms buf;
  for (const auto& [bi, ci] : x.terms)
    for (const auto& [bj, cj] : y.terms) {
      buf.clear();
      circ_basis(alg_->root_of(bi), alg_->root_of(bj), buf);
      Rat f = ci * cj;
      for (const auto& [b, c] : buf) out.add(b, f * c);
    }
  for (const auto& [b, c] : out.terms)
    if (alg_->is_cartan(b) || !in_tip(alg_->root_of(b)))
      throw std::logic_error("circ product leaked outside the tip");
  return out;
}

Rat HTAlgebra::trace(const Element& x) const {
  check_in_tip(x);
  Rat t;
  for (int i = 0; i < 3; ++i) t += x.coeff(alg_->gen_index(scalars_[i]));
  return t;
}

Rat HTAlgebra::trace_form(const Element& x, const Element& y) const {
  return trace(circ(x, y));
}

Rat HTAlgebra::trace_form_basis(int rootA, int rootB) const {
  Terms buf;
  circ_basis(rootA, rootB, buf);
  Rat t;
  for (const auto& [b, c] : buf) {
    int r = alg_->root_of(b);
    if (r == scalars_[0] || r == scalars_[1] || r == scalars_[2]) t += c;
  }
  return t;
}

Element HTAlgebra::sharp(const Element& x) const {
  Element x2 = circ(x, x);
  Rat tx = trace(x), tx2 = trace(x2);
  Element out = x2 - x * tx - I_ * ((tx2 - tx * tx) / Rat(2));
  return out;
}

Rat HTAlgebra::norm3(const Element& x) const {
  Element x2 = circ(x, x);
  Element x3 = circ(x, x2);
  Rat tx = trace(x), tx2 = trace(x2), tx3 = trace(x3);
  Rat closed = (tx * tx * tx - Rat(3) * tx * tx2 + Rat(2) * tx3) / Rat(6);
  Rat via_sharp = trace_form(sharp(x), x) / Rat(3);
  if (closed != via_sharp)
    throw std::logic_error("the two cubic-norm expressions disagree");
  return closed;
}

int HTAlgebra::rank(const Element& x) const {
  if (x.is_zero()) return 0;  // convention: zero is rank 0
  if (sharp(x).is_zero()) return 1;
  if (norm3(x).is_zero()) return 2;
  return 3;
}

BlockMatrixView HTAlgebra::matrix_view(const Element& x) const {
  check_in_tip(x);
  const int M = vector_mu_count();
  BlockMatrixView v;
  v.lv.assign(2 * M, Rat());
  v.ls_plus.assign(spin_plus_.size(), Rat());
  v.ls_minus.assign(spin_minus_.size(), Rat());
  for (const auto& [b, c] : x.terms) {
    int r = alg_->root_of(b);
    if (r == scalars_[0]) { v.l1 = c; continue; }
    if (r == scalars_[1]) { v.l2 = c; continue; }
    if (r == scalars_[2]) { v.l3 = c; continue; }
    auto sp = std::find(spin_plus_.begin(), spin_plus_.end(), r);
    if (sp != spin_plus_.end()) {
      v.ls_plus[sp - spin_plus_.begin()] = c;
      continue;
    }
    auto sm = std::find(spin_minus_.begin(), spin_minus_.end(), r);
    if (sm != spin_minus_.end()) {
      v.ls_minus[sm - spin_minus_.begin()] = c;
      continue;
    }
    for (int mu = 0; mu < M; ++mu)
      for (int chir : {1, -1})
        if (vector_root(mu, chir) == r)
          v.lv[(chir > 0 ? 0 : M) + mu] = c * Rat(vector_sign(mu, chir));
  }
  return v;
}

Element HTAlgebra::from_view(const BlockMatrixView& v) const {
  const int M = vector_mu_count();
  Element x = alg_->zero();
  x.add(alg_->gen_index(scalars_[0]), v.l1);
  x.add(alg_->gen_index(scalars_[1]), v.l2);
  x.add(alg_->gen_index(scalars_[2]), v.l3);
  for (int mu = 0; mu < M; ++mu) {
    x.add(alg_->gen_index(vector_root(mu, 1)), v.lv[mu]);
    x.add(alg_->gen_index(vector_root(mu, -1)),
          v.lv[M + mu] * Rat(vector_sign(mu, -1)));
  }
  for (std::size_t i = 0; i < spin_plus_.size(); ++i)
    x.add(alg_->gen_index(spin_plus_[i]), v.ls_plus[i]);
  for (std::size_t i = 0; i < spin_minus_.size(); ++i)
    x.add(alg_->gen_index(spin_minus_[i]), v.ls_minus[i]);
  return x;
}

std::vector<Rat> HTAlgebra::trace_form_table() const {
  const std::size_t d = tip_.size();
  std::vector<Rat> tf(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      tf[i * d + j] = trace_form_basis(tip_[i], tip_[j]);
  return tf;
}

}  // namespace magicstar
