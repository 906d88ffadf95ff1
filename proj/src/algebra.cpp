#include "magicstar/algebra.hpp"

#include <atomic>

#include "magicstar/rng.hpp"

namespace magicstar {

Element& Element::operator+=(const Element& o) {
  for (const auto& [b, c] : o.terms) add(b, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [b, c] : o.terms) add(b, -c);
  return *this;
}

Element& Element::operator*=(const Rat& c) {
  if (c.is_zero()) { terms.clear(); return *this; }
  for (auto& [b, v] : terms) v *= c;
  return *this;
}

namespace {
std::atomic<int> g_next_algebra_id{0};
}

Algebra::Algebra(const AlgebraSpec& spec)
    : rs_(enumerate_roots(spec)),
      sign_(simple_sign_matrix(rs_)),
      eps_(rs_, sign_),
      id_(g_next_algebra_id++) {}

Element Algebra::basis(BasisIndex b) const {
  Element e = zero();
  e.add(b, Rat(1));
  return e;
}

Element Algebra::cartan_element(int rootIdx) const {
  Element e = zero();
  const Root& r = rs_.roots[rootIdx];
  for (int i = 0; i < spec().R; ++i) e.add(i, Rat(r.simple[i]));
  return e;
}

Element Algebra::cartan_element(const Coords2& v) const {
  auto idx = rs_.root_index(v);
  if (!idx) throw std::invalid_argument("cartan_element: not a root");
  return cartan_element(*idx);
}

void Algebra::bracket_basis(BasisIndex a, BasisIndex b, Terms& out) const {
  const int R = spec().R;
  if (a < R) {
    if (b < R) return;  // [h_i, h_j] = 0
    int beta = b - R;
    int p = rs_.cartan_pairing(beta, a);
    if (p != 0) out.emplace_back(b, Rat(p));
    return;
  }
  if (b < R) {  // [x_alpha, h_i] = -(alpha, alpha_i) x_alpha
    int alpha = a - R;
    int p = rs_.cartan_pairing(alpha, b);
    if (p != 0) out.emplace_back(a, Rat(-p));
    return;
  }
  int alpha = a - R, beta = b - R;
  const Root& ra = rs_.roots[alpha];
  if (ra.neg == beta) {  // [x_alpha, x_{-alpha}] = -h_alpha
    for (int i = 0; i < R; ++i)
      if (ra.simple[i] != 0) out.emplace_back(i, Rat(-ra.simple[i]));
    return;
  }
  Coords2 sum = coords2_add(ra.coords2, rs_.roots[beta].coords2, spec().N);
  auto idx = rs_.root_index(sum);
  if (idx) out.emplace_back(gen_index(*idx), Rat(eps_.eps(alpha, beta)));
}

void Algebra::check_same(const Element& x) const {
  if (x.algebra_id != id_)
    throw instance_mismatch_error("element belongs to another algebra instance");
}

Element Algebra::bracket(const Element& x, const Element& y) const {
  check_same(x);
  check_same(y);
  Element out = zero();
  Terms buf;
  for (const auto& [bi, ci] : x.terms)
    for (const auto& [bj, cj] : y.terms) {
      buf.clear();
      bracket_basis(bi, bj, buf);
      Rat f = ci * cj;
      for (const auto& [b, c] : buf) out.add(b, f * c);
    }
  return out;
}

Element Algebra::jacobiator(const Element& x, const Element& y, const Element& z) const {
  Element acc = bracket(bracket(x, y), z);
  acc += bracket(bracket(y, z), x);
  acc += bracket(bracket(z, x), y);
  return acc;
}

Element Algebra::involution(const Element& x) const {
  check_same(x);
  Element out = zero();
  for (const auto& [b, c] : x.terms) {
    if (is_cartan(b)) out.add(b, -c);
    else out.add(gen_index(rs_.roots[root_of(b)].neg), c);
  }
  return out;
}

std::string Algebra::basis_name(BasisIndex b) const {
  if (is_cartan(b)) return "h_" + std::to_string(b + 1);
  return "x[" + std::to_string(root_of(b)) + "]" +
         coords2_str(rs_.roots[root_of(b)].coords2, spec().N);
}

namespace {

// Accumulate [[a,b],c] into acc at basis level.
void nested_term(const Algebra& alg, BasisIndex a, BasisIndex b, BasisIndex c,
                 std::map<BasisIndex, Rat>& acc, Terms& buf1, Terms& buf2) {
  buf1.clear();
  alg.bracket_basis(a, b, buf1);
  for (const auto& [t, ct] : buf1) {
    buf2.clear();
    alg.bracket_basis(t, c, buf2);
    for (const auto& [u, cu] : buf2) {
      auto [it, fresh] = acc.emplace(u, ct * cu);
      if (!fresh) it->second += ct * cu;
    }
  }
}

int jac_support(const Algebra& alg, BasisIndex a, BasisIndex b, BasisIndex c,
                std::map<BasisIndex, Rat>& acc, Terms& buf1, Terms& buf2) {
  acc.clear();
  nested_term(alg, a, b, c, acc, buf1, buf2);
  nested_term(alg, b, c, a, acc, buf1, buf2);
  nested_term(alg, c, a, b, acc, buf1, buf2);
  int support = 0;
  for (const auto& [k, v] : acc)
    if (!v.is_zero()) ++support;
  return support;
}

int spinor_count(const Algebra& alg, BasisIndex a, BasisIndex b, BasisIndex c) {
  int cnt = 0;
  for (BasisIndex x : {a, b, c})
    if (!alg.is_cartan(x) &&
        alg.rs().roots[alg.root_of(x)].kind == RootKind::Spinor)
      ++cnt;
  return cnt;
}

void record(JacobiReport& rep, const Algebra& alg, BasisIndex a, BasisIndex b,
            BasisIndex c, int support, std::size_t cap) {
  ++rep.violations;
  if (rep.witnesses.size() < cap)
    rep.witnesses.push_back({a, b, c, support, spinor_count(alg, a, b, c)});
}

}  // namespace

JacobiReport jacobi_scan_exhaustive(const Algebra& alg, JacobiScanKind kind,
                                    std::size_t witness_cap) {
  const int R = alg.spec().R;
  std::vector<BasisIndex> basis;
  for (int i = 0; i < R; ++i) basis.push_back(i);
  for (const auto& r : alg.rs().roots)
    if (kind == JacobiScanKind::Full || r.kind == RootKind::Orthogonal)
      basis.push_back(alg.gen_index(r.index));
  const int M = static_cast<int>(basis.size());

  // Pairwise interaction test; a triple with no interacting pair has an
  // identically zero Jacobiator.
  auto interacts = [&](BasisIndex a, BasisIndex b) {
    Terms t;
    alg.bracket_basis(a, b, t);
    return !t.empty();
  };

  JacobiReport rep;
  rep.mode = "exhaustive";
  std::map<BasisIndex, Rat> acc;
  Terms buf1, buf2;
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j) {
      bool ij = interacts(basis[i], basis[j]);
      for (int k = j + 1; k < M; ++k) {
        BasisIndex a = basis[i], b = basis[j], c = basis[k];
        ++rep.triples_checked;
        if (!ij && !interacts(b, c) && !interacts(a, c)) continue;
        int support = jac_support(alg, a, b, c, acc, buf1, buf2);
        if (support != 0) record(rep, alg, a, b, c, support, witness_cap);
      }
    }
  return rep;
}

JacobiReport jacobi_scan_sampled(const Algebra& alg, long long budget,
                                 std::uint64_t seed, std::size_t witness_cap) {
  std::vector<BasisIndex> klass[3];  // Cartan / orthogonal / spinor
  for (int i = 0; i < alg.spec().R; ++i) klass[0].push_back(i);
  for (const auto& r : alg.rs().roots)
    klass[r.kind == RootKind::Spinor ? 2 : 1].push_back(alg.gen_index(r.index));

  JacobiReport rep;
  rep.mode = "sampled(seed=" + std::to_string(seed) + ")";
  std::map<BasisIndex, Rat> acc;
  Terms buf1, buf2;
  long long per_stratum = budget / 27;
  for (int sa = 0; sa < 3; ++sa)
    for (int sb = 0; sb < 3; ++sb)
      for (int sc = 0; sc < 3; ++sc) {
        Rng rng(Rng::derive(seed, 9 * sa + 3 * sb + sc));
        for (long long t = 0; t < per_stratum; ++t) {
          BasisIndex a = klass[sa][rng.below(klass[sa].size())];
          BasisIndex b = klass[sb][rng.below(klass[sb].size())];
          BasisIndex c = klass[sc][rng.below(klass[sc].size())];
          ++rep.triples_checked;
          int support = jac_support(alg, a, b, c, acc, buf1, buf2);
          if (support != 0) record(rep, alg, a, b, c, support, witness_cap);
        }
      }
  return rep;
}

}  // namespace magicstar
