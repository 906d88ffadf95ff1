#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "magicstar/asymmetry.hpp"
#include "magicstar/rng.hpp"

using namespace magicstar;

TEST_CASE("sign matrix on the simple roots") {
  RootSystem rs = enumerate_roots(make_spec(Family::E8, 1));
  SimpleSignMatrix m = simple_sign_matrix(rs);
  const int R = rs.spec.R;
  for (int i = 0; i < R; ++i) CHECK(m.eps(i, i) == -1);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      Coords2 sum = coords2_add(rs.delta[i], rs.delta[j], rs.spec.N);
      bool is_root = rs.root_index(sum).has_value();
      if (i < j) CHECK(m.eps(i, j) == (is_root ? -1 : 1));
      if (i > j && is_root) CHECK(m.eps(i, j) == 1);
    }
  // (k_{R-3} - k_{R-2}) + (k_{R-2} + k_{R-1}) = k_{R-3} + k_{R-1} is a root,
  // so the upper entry is forced to -1 and the mirror entry to +1.
  CHECK(m.eps(R - 4, R - 2) == -1);
  CHECK(m.eps(R - 2, R - 4) == 1);
}

TEST_CASE("epsilon on trivial and degenerate arguments") {
  RootSystem rs = enumerate_roots(make_spec(Family::E6, 1));
  SimpleSignMatrix m = simple_sign_matrix(rs);
  SimpleCoords zero{std::vector<long long>(rs.spec.R, 0)};
  for (const auto& r : rs.roots) {
    SimpleCoords a = rs.decompose(r.coords2);
    CHECK(epsilon(zero, a, m) == 1);
    CHECK(epsilon(a, zero, m) == 1);
    CHECK(epsilon(a, a, m) == -1);  // roots are always eps-diagonal -1
  }
}

TEST_CASE("epsilon is insensitive to negation of either argument") {
  RootSystem rs = enumerate_roots(make_spec(Family::E8, 1));
  SimpleSignMatrix m = simple_sign_matrix(rs);
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const Root& a = rs.roots[rng.below(rs.size())];
    const Root& b = rs.roots[rng.below(rs.size())];
    SimpleCoords sa = rs.decompose(a.coords2);
    SimpleCoords sb = rs.decompose(b.coords2);
    SimpleCoords na = sa, nb = sb;
    for (auto& x : na.m) x = -x;
    for (auto& x : nb.m) x = -x;
    int e = epsilon(sa, sb, m);
    CHECK(epsilon(na, sb, m) == e);
    CHECK(epsilon(sa, nb, m) == e);
  }
}

TEST_CASE("biadditivity on random small lattice vectors") {
  RootSystem rs = enumerate_roots(make_spec(Family::E8, 1));
  SimpleSignMatrix m = simple_sign_matrix(rs);
  const int R = rs.spec.R;
  Rng rng(11);
  auto rand_vec = [&]() {
    SimpleCoords v{std::vector<long long>(R)};
    for (auto& x : v.m) x = rng.range(-3, 3);
    return v;
  };
  for (int t = 0; t < 2000; ++t) {
    SimpleCoords a = rand_vec(), b = rand_vec(), c = rand_vec();
    SimpleCoords ab = a;
    for (int i = 0; i < R; ++i) ab.m[i] += b.m[i];
    CHECK(epsilon(ab, c, m) == epsilon(a, c, m) * epsilon(b, c, m));
    CHECK(epsilon(c, ab, m) == epsilon(c, a, m) * epsilon(c, b, m));
  }
}

TEST_CASE("EpsilonTable agrees with the generic evaluation on all root pairs") {
  RootSystem rs = enumerate_roots(make_spec(Family::E6, 1));
  SimpleSignMatrix m = simple_sign_matrix(rs);
  EpsilonTable tbl(rs, m);
  for (const auto& a : rs.roots)
    for (const auto& b : rs.roots) {
      SimpleCoords sa = rs.decompose(a.coords2);
      SimpleCoords sb = rs.decompose(b.coords2);
      CHECK(tbl.eps(a.index, b.index) == epsilon(sa, sb, m));
    }
}

TEST_CASE("antisymmetry and cocycle shifts on composable root pairs") {
  for (int n : {1, 2}) {
    RootSystem rs = enumerate_roots(make_spec(Family::E8, n));
    SimpleSignMatrix m = simple_sign_matrix(rs);
    EpsilonTable tbl(rs, m);
    Rng rng(23);
    long long seen = 0;
    for (int t = 0; t < 20000 && seen < 4000; ++t) {
      int a = static_cast<int>(rng.below(rs.size()));
      int b = static_cast<int>(rng.below(rs.size()));
      auto sum = rs.root_index(
          coords2_add(rs.roots[a].coords2, rs.roots[b].coords2, rs.spec.N));
      if (!sum) continue;
      ++seen;
      CHECK(tbl.eps(a, b) == -tbl.eps(b, a));
      CHECK(tbl.eps(a, b) == tbl.eps(b, *sum));
    }
    CHECK(seen > 0);
  }
}

TEST_CASE("the product-rule exponents are integral on root pairs") {
  RootSystem rs = enumerate_roots(make_spec(Family::E8, 2));
  const int n = 2, R = rs.spec.R, N = rs.spec.N;
  Rng rng(31);
  for (int t = 0; t < 2000; ++t) {
    const Root& a = rs.roots[rng.below(rs.size())];
    const Root& b = rs.roots[rng.below(rs.size())];
    // iii) (alpha,alpha)/2 - m_R^2 (n-1)/2
    Rat e3 = rs.inner_roots(a.index, a.index) / Rat(2) -
             Rat(1LL * a.simple[R - 1] * a.simple[R - 1] * (n - 1), 2);
    CHECK(e3.is_integer());
    // iv) (alpha,beta) - m_R n_R (n-1)
    Rat e4 = inner(a.coords2, b.coords2, N) -
             Rat(1LL * a.simple[R - 1] * b.simple[R - 1] * (n - 1));
    CHECK(e4.is_integer());
  }
}
