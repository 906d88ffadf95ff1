#pragma once

#include <map>
#include <string>
#include <vector>

#include "magicstar/asymmetry.hpp"
#include "magicstar/lattice.hpp"
#include "magicstar/rational.hpp"

namespace magicstar {

// Basis index: 0..R-1 are the Cartan generators h_1..h_R, R+k is the
// generator x_alpha for the root with canonical index k.
using BasisIndex = int;

struct instance_mismatch_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Finitely supported map basis index -> exact rational, tagged with the
// owning algebra instance.
struct Element {
  int algebra_id = -1;
  std::map<BasisIndex, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(BasisIndex b, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  Rat coeff(BasisIndex b) const {
    auto it = terms.find(b);
    return it == terms.end() ? Rat() : it->second;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.terms == b.terms;
  }
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rat& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rat& c) { return a *= c; }
};

// Small flat term list used on the basis-bracket hot path.
using Terms = std::vector<std::pair<BasisIndex, Rat>>;

// The algebra L_MS over exact rationals: Cartan space plus one generator
// per generalized root, with the asymmetry-function bracket table.
class Algebra {
 public:
  explicit Algebra(const AlgebraSpec& spec);

  const RootSystem& rs() const { return rs_; }
  const AlgebraSpec& spec() const { return rs_.spec; }
  const SimpleSignMatrix& sign_matrix() const { return sign_; }
  const EpsilonTable& eps_table() const { return eps_; }
  int id() const { return id_; }

  int dim() const { return spec().R + rs_.size(); }
  bool is_cartan(BasisIndex b) const { return b < spec().R; }
  int root_of(BasisIndex b) const { return b - spec().R; }
  BasisIndex gen_index(int rootIdx) const { return spec().R + rootIdx; }

  int eps(int rootA, int rootB) const { return eps_.eps(rootA, rootB); }

  Element zero() const { return Element{id_, {}}; }
  Element basis(BasisIndex b) const;
  Element gen(int rootIdx) const { return basis(gen_index(rootIdx)); }
  Element cartan(int i) const { return basis(i); }

  // h_alpha = sum c_i h_i with c = decompose(alpha); alpha given by root
  // index or raw doubled coordinates (non-roots are rejected).
  Element cartan_element(int rootIdx) const;
  Element cartan_element(const Coords2& v) const;

  // Bracket of two basis generators, appended to `out`.
  void bracket_basis(BasisIndex a, BasisIndex b, Terms& out) const;

  Element bracket(const Element& x, const Element& y) const;
  Element jacobiator(const Element& x, const Element& y, const Element& z) const;

  // Cartan involution: x_alpha -> x_{-alpha}, h -> -h.
  Element involution(const Element& x) const;

  std::string basis_name(BasisIndex b) const;

 private:
  void check_same(const Element& x) const;

  RootSystem rs_;
  SimpleSignMatrix sign_;
  EpsilonTable eps_;
  int id_;
};

struct JacobiReport {
  long long triples_checked = 0;
  long long violations = 0;
  // (basis triple description, jacobiator support size, # spinor generators)
  struct Witness {
    BasisIndex a, b, c;
    int support;
    int spinor_generators;
  };
  std::vector<Witness> witnesses;  // capped
  std::string mode;                // "exhaustive" or "sampled(seed)"
};

enum class JacobiScanKind { Full, OrthogonalOnly };

// Exhaustive scan over unordered basis triples (pruned: a triple whose
// three pairwise brackets all vanish has zero Jacobiator).
JacobiReport jacobi_scan_exhaustive(const Algebra& alg,
                                    JacobiScanKind kind = JacobiScanKind::Full,
                                    std::size_t witness_cap = 100);

// Seeded sampling stratified by (kind,kind,kind) over Cartan/orthogonal/
// spinor basis classes.
JacobiReport jacobi_scan_sampled(const Algebra& alg, long long budget,
                                 std::uint64_t seed,
                                 std::size_t witness_cap = 100);

}  // namespace magicstar
