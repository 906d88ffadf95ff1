#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "magicstar/magic_star.hpp"
#include "magicstar/rng.hpp"

using namespace magicstar;

namespace {

Coords2 c2(std::initializer_list<int> v) {
  Coords2 out{};
  int i = 0;
  for (int x : v) out[i++] = static_cast<std::int8_t>(x);
  return out;
}

}  // namespace

TEST_CASE("charge map on the table generators") {
  CHECK(charge_of_coords(c2({2, 2, 0, 0, 0, 0, 0, 0})) == Charge{0, 2});    // k1+k2
  CHECK(charge_of_coords(c2({0, -2, -2, 0, 0, 0, 0, 0})) == Charge{1, 1});  // -k2-k3
  CHECK(charge_of_coords(c2({0, 2, -2, 0, 0, 0, 0, 0})) == Charge{-1, 3});  // k2-k3
  CHECK(charge_of_coords(c2({2, -2, 0, 0, 0, 0, 0, 0})) == Charge{2, 0});   // k1-k2
}

TEST_CASE("charge is additive on composable pairs") {
  for (int n : {1, 2}) {
    RootSystem rs = enumerate_roots(make_spec(Family::E8, n));
    for (const auto& a : rs.roots)
      for (const auto& b : rs.roots) {
        auto sum = rs.root_index(coords2_add(a.coords2, b.coords2, rs.spec.N));
        if (!sum) continue;
        CHECK(charge(rs.roots[*sum]) == charge(a) + charge(b));
      }
    if (n == 2) break;  // one level of the quadratic loop is enough here
  }
}

TEST_CASE("partition cardinalities match the tables") {
  struct Row { Family f; int n; long long tip, center; };
  for (Row row : {Row{Family::E8, 1, 27, 72}, Row{Family::E8, 2, 275, 656},
                  Row{Family::E6, 1, 9, 12}}) {
    RootSystem rs = enumerate_roots(make_spec(row.f, row.n));
    MagicStarPartition p = partition(rs);
    CHECK(static_cast<long long>(p.center.size()) == row.center);
    for (const auto& t : p.tips)
      CHECK(static_cast<long long>(t.size()) == row.tip);
    for (int idx : p.points) CHECK(idx >= 0);
  }
}

TEST_CASE("tips bracket trivially") {
  Algebra alg(make_spec(Family::E8, 1));
  MagicStarPartition p = partition(alg.rs());
  Terms buf;
  for (const auto& t : p.tips)
    for (int a : t)
      for (int b : t) {
        buf.clear();
        alg.bracket_basis(alg.gen_index(a), alg.gen_index(b), buf);
        CHECK(buf.empty());
      }
}

TEST_CASE("three-grading structure") {
  RootSystem rs = enumerate_roots(make_spec(Family::E8, 1));
  Grading3 g = three_grading(rs, Charge{0, 2});
  CHECK(g.plus.size() == 27);
  CHECK(g.minus.size() == 27);
  CHECK(g.center.size() == 72);
  CHECK(g.cartan_dim == 7);  // N-2 center directions plus the axis line
  // 72 + 54 + 7 = 133: the three-graded subalgebra of e8 at n=1.
  CHECK(g.dim() == 133);
  CHECK_THROWS_AS(three_grading(rs, Charge{2, 0}), std::invalid_argument);
}

TEST_CASE("five-grading is of contact type") {
  for (int n : {1, 2}) {
    RootSystem rs = enumerate_roots(make_spec(Family::E8, n));
    Grading5 g = five_grading(rs);
    CHECK(g.grade(2).size() == 1);
    CHECK(g.grade(-2).size() == 1);
    CHECK(g.grade(1).size() == (n == 1 ? 56 : 552));
    CHECK(rs.roots[g.rho_plus].coords2 == c2({2, -2}));
    std::size_t total = 0;
    for (int gr = -2; gr <= 2; ++gr) total += g.grade(gr).size();
    CHECK(total == static_cast<std::size_t>(rs.size()));
  }
}

TEST_CASE("triple product on a tip") {
  Algebra alg(make_spec(Family::E8, 1));
  MagicStarPartition p = partition(alg.rs());
  Charge tip{1, 1};
  for (int idx : p.tip(tip)) {
    Element x = alg.gen(idx);
    Element got = triple_product_T(alg, tip, x, x, x);
    CHECK(got == x * (-alg.rs().inner_roots(idx, idx)));
  }
  // Support outside the tip is rejected.
  CHECK_THROWS_AS(triple_product_T(alg, tip, alg.gen(p.center[0]),
                                   alg.gen(p.center[0]), alg.gen(p.center[0])),
                  std::invalid_argument);
}

TEST_CASE("symplectic form specializes the bracket table") {
  Algebra alg(make_spec(Family::E8, 1));
  Grading5 g = five_grading(alg.rs());
  const auto& g1 = g.grade(1);
  const Coords2& rho = alg.rs().roots[g.rho_plus].coords2;
  int seen = 0;
  for (int a : g1) {
    CHECK(symplectic_form(alg, g, alg.gen(a), alg.gen(a)) == Rat(0));
    for (int b : g1) {
      Coords2 sum = coords2_add(alg.rs().roots[a].coords2,
                                alg.rs().roots[b].coords2, alg.rs().spec.N);
      if (sum == rho) {
        CHECK(symplectic_form(alg, g, alg.gen(a), alg.gen(b)) == Rat(alg.eps(a, b)));
        ++seen;
      }
    }
  }
  CHECK(seen > 0);
  CHECK(symplectic_gram_rank(alg, g) == 56);
}

TEST_CASE("quartic form symmetrization agrees with the diagonal") {
  Algebra alg(make_spec(Family::E8, 1));
  Grading5 g = five_grading(alg.rs());
  const auto& g1 = g.grade(1);
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    Element x = alg.zero();
    for (int k = 0; k < 5; ++k)
      x.add(alg.gen_index(g1[rng.below(g1.size())]),
            Rat(rng.range(-4, 4), rng.range(1, 3)));
    if (x.is_zero()) continue;
    CHECK(quartic_diagonal(alg, g, x) == quartic_form(alg, g, x, x, x, x));
  }
  // A nonzero value exists on basis 4-tuples.
  bool nonzero = false;
  for (int t = 0; t < 4000 && !nonzero; ++t) {
    Element a = alg.gen(g1[rng.below(g1.size())]);
    Element b = alg.gen(g1[rng.below(g1.size())]);
    Element c = alg.gen(g1[rng.below(g1.size())]);
    Element d = alg.gen(g1[rng.below(g1.size())]);
    nonzero = !quartic_form(alg, g, a, b, c, d).is_zero();
  }
  CHECK(nonzero);
}

TEST_CASE("exact matrix rank") {
  CHECK(matrix_rank({}) == 0);
  CHECK(matrix_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(matrix_rank({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == 2);
  CHECK(matrix_rank({{Rat(1, 2), Rat(1, 3)}, {Rat(1, 4), Rat(1, 6)}}) == 1);
}

TEST_CASE("partition rejects the e7 route") {
  CHECK_THROWS_AS(enumerate_roots(make_spec(Family::E7, 1)), std::invalid_argument);
}
