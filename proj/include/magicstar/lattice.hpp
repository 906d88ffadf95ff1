#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "magicstar/rational.hpp"

namespace magicstar {

enum class Family { E6, E7, E8 };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct span_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct not_in_lattice_error : std::domain_error {
  using std::domain_error::domain_error;
};

// family (E6/E7/E8) and level n, with N = 4(n+1) and rank R.
struct AlgebraSpec {
  Family family;
  int n;  // level, n >= 1
  int N;  // ambient coordinate dimension, 4(n+1)
  int R;  // rank: N-2 (E6), N-1 (E7), N (E8)
};

// Hard cap on the ambient dimension; n <= 4 keeps every coordinate key
// inside one 64-bit word (3 bits per doubled coordinate).
inline constexpr int kMaxN = 20;
inline constexpr int kMaxR = 20;

AlgebraSpec make_spec(Family family, int n);

enum class RootKind : std::uint8_t { Orthogonal, Spinor };

// Doubled orthonormal coordinates: the true coordinate of k_i is
// coords2[i]/2. Orthogonal roots have two entries +-2, spinor roots have
// every entry +-1. Entries beyond N are zero.
using Coords2 = std::array<std::int8_t, kMaxN>;

Coords2 coords2_add(const Coords2& a, const Coords2& b, int N);
Coords2 coords2_neg(const Coords2& a, int N);
std::string coords2_str(const Coords2& a, int N);

// Exact inner product (sum a_i b_i)/4 of two doubled-coordinate vectors.
Rat inner(const Coords2& a, const Coords2& b, int N);

struct Root {
  Coords2 coords2{};
  RootKind kind = RootKind::Orthogonal;
  int index = -1;  // position in the canonical enumeration
  std::array<std::int16_t, kMaxR> simple{};  // integer coefficients on Delta
  std::int8_t r = 0, s = 0;                  // Magic Star charge
  int neg = -1;                              // index of the opposite root
};

// Integer coefficients m_i of a lattice vector on the ordered simple roots.
struct SimpleCoords {
  std::vector<long long> m;
};

class RootSystem {
 public:
  AlgebraSpec spec;
  std::vector<Root> roots;
  std::vector<Coords2> delta;        // the R simple roots, ordered
  std::vector<int> delta_index;      // their positions in `roots`

  int size() const { return static_cast<int>(roots.size()); }

  // Index of the root with the given doubled coordinates, if any.
  std::optional<int> root_index(const Coords2& v) const;

  // Exact integer decomposition on Delta. Throws if v is outside the
  // rational span of Delta or if the (unique) solution is not integral.
  SimpleCoords decompose(const Coords2& v) const;

  // Reconstruct doubled coordinates from simple-root coefficients.
  Coords2 recompose(const SimpleCoords& c) const;

  Rat inner_roots(int a, int b) const {
    return inner(roots[a].coords2, roots[b].coords2, spec.N);
  }

  // (alpha, alpha_i) for root index a and simple root i; always an integer.
  int cartan_pairing(int a, int i) const {
    return cartan_pairing_[static_cast<std::size_t>(a) * spec.R + i];
  }

 private:
  friend RootSystem enumerate_roots(const AlgebraSpec& spec);

  void build_lookup();
  void build_solver();
  void decompose_all();

  // Packed-key map covering all roots; spinor fast path below.
  std::unordered_map<std::uint64_t, int> lookup_;
  std::vector<int> spinor_by_mask_;  // 2^N entries, -1 where absent

  // Exact solver for decompose(): inverse of an RxR pivot submatrix of
  // the simple-root matrix, plus the pivot row choice.
  std::vector<Rat> solver_inv_;  // row-major RxR
  std::vector<int> pivot_rows_;

  std::vector<std::int8_t> cartan_pairing_;
};

// Generates Phi = Phi_O u Phi_S for E6/E8 at the given level; E7 has no
// standalone table and is reached as the 3-graded subalgebra of e8^(n).
RootSystem enumerate_roots(const AlgebraSpec& spec);

// The ordered simple roots alpha_1 < ... < alpha_R in doubled coordinates.
std::vector<Coords2> simple_roots(const AlgebraSpec& spec);

// Closed-form per-cell counts from the enumeration tables.
struct CellCounts {
  long long point;    // each of the six one-root cells
  long long tip;      // each of the six tip cells
  long long center;
  long long total() const { return 6 * point + 6 * tip + center; }
};
CellCounts cell_counts(const AlgebraSpec& spec);

}  // namespace magicstar
