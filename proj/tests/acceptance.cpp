// Acceptance gate: one line per criterion, overall exit status 0 iff all
// criteria pass. Everything is exact rational arithmetic; every tolerance
// is zero.
#include <chrono>
#include <cstdio>
#include <vector>

#include "magicstar/ht_algebra.hpp"
#include "magicstar/ht_pair.hpp"
#include "magicstar/rng.hpp"
#include "magicstar/verify.hpp"

using namespace magicstar;

namespace {

int g_failures = 0;

void criterion(int num, const char* what, bool ok, double seconds) {
  std::printf("criterion %d: %s — %s (%.1f s)\n", num, ok ? "PASS" : "FAIL",
              what, seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

SuiteConfig cfg_of(Family f, int n) {
  SuiteConfig cfg;
  cfg.family = f;
  cfg.n = n;
  return cfg;
}

bool suite_ok(const char* id, Family f, int n) {
  SuiteReport rep = run_suite(id, cfg_of(f, n));
  if (!rep.passed)
    std::fprintf(stderr, "  [%s %s n=%d] failed=%lld\n", id,
                 f == Family::E8 ? "e8" : "e6", n, rep.failed);
  return rep.passed;
}

bool charge_additivity(Family f, int n) {
  RootSystem rs = enumerate_roots(make_spec(f, n));
  for (const auto& a : rs.roots)
    for (const auto& b : rs.roots) {
      auto sum = rs.root_index(coords2_add(a.coords2, b.coords2, rs.spec.N));
      if (sum && !(charge(rs.roots[*sum]) == charge(a) + charge(b)))
        return false;
    }
  return true;
}

Element random_tip_element(const Algebra& alg, const HTAlgebra& ht, Rng& rng) {
  Element x = alg.zero();
  for (int t = 0; t < 8; ++t) {
    long long num = rng.range(-3, 3);
    if (num == 0) continue;
    x.add(alg.gen_index(ht.tip()[rng.below(ht.tip().size())]),
          Rat(num, rng.range(1, 3)));
  }
  return x;
}

}  // namespace

int main() {
  // 1. Root counts across the family table, under ten seconds.
  {
    Timer t;
    bool ok = enumerate_roots(make_spec(Family::E8, 1)).size() == 240 &&
              enumerate_roots(make_spec(Family::E6, 1)).size() == 72 &&
              enumerate_roots(make_spec(Family::E8, 2)).size() == 2312 &&
              enumerate_roots(make_spec(Family::E8, 3)).size() == 33248 &&
              suite_ok("COUNTS", Family::E8, 1) &&
              suite_ok("COUNTS", Family::E6, 1) &&
              suite_ok("COUNTS", Family::E8, 2) &&
              suite_ok("COUNTS", Family::E8, 3);
    double s = t.secs();
    criterion(1, "root counts 240 / 72 / 2312 / 33248 with table invariants",
              ok && s < 10.0, s);
  }

  // 2. Asymmetry-function property suites, exhaustive then sampled.
  {
    Timer t;
    bool ok = suite_ok("P2.1", Family::E8, 1) && suite_ok("P2.2", Family::E8, 1) &&
              suite_ok("P2.1", Family::E8, 2) && suite_ok("P2.2", Family::E8, 2) &&
              suite_ok("P2.1", Family::E8, 3) && suite_ok("P2.2", Family::E8, 3);
    double s = t.secs();
    criterion(2, "asymmetry-function suites exhaustive n<=2, sampled 1e6 at n=3",
              ok && s < 300.0, s);
  }

  // 3. Jacobi: clean at n=1, measured spinorial violations at n=2, clean on
  //    the orthogonal restriction.
  {
    Timer t;
    bool ok = suite_ok("JACOBI", Family::E8, 1) && suite_ok("JACOBI", Family::E8, 2);
    double s = t.secs();
    criterion(3, "Jacobi clean at n=1; spinorial violations measured at n=2",
              ok && s < 900.0, s);
  }

  // 4. Magic Star partition cardinalities, tip triviality, charge additivity.
  {
    Timer t;
    bool ok = true;
    for (int n = 1; n <= 3; ++n)
      ok = ok && suite_ok("P3.1", Family::E8, n) && suite_ok("P3.1", Family::E6, n);
    ok = ok && charge_additivity(Family::E8, 1) && charge_additivity(Family::E8, 2) &&
         charge_additivity(Family::E6, 1) && charge_additivity(Family::E6, 2);
    criterion(4, "star partition tables n<=3, [T,T]=0, charge additivity n<=2",
              ok, t.secs());
  }

  // 5. Gradings: 3-grading closure, contact 5-grading dims, symplectic rank.
  {
    Timer t;
    bool ok = suite_ok("P3.2", Family::E8, 1) && suite_ok("P3.2", Family::E8, 2) &&
              suite_ok("D3.2", Family::E8, 1) && suite_ok("D3.2", Family::E8, 2);
    RootSystem rs1 = enumerate_roots(make_spec(Family::E8, 1));
    RootSystem rs2 = enumerate_roots(make_spec(Family::E8, 2));
    ok = ok && five_grading(rs1).grade(1).size() == 56 &&
         five_grading(rs2).grade(1).size() == 552;
    criterion(5, "grading closure, dim g1 = 56 / 552, symplectic rank 56",
              ok, t.secs());
  }

  // 6. HT-algebra product suites.
  {
    Timer t;
    bool ok = true;
    for (int n = 1; n <= 2; ++n)
      ok = ok && suite_ok("P4.1", Family::E8, n) && suite_ok("LA.1", Family::E8, n) &&
           suite_ok("PA.2", Family::E8, n) && suite_ok("LA.3", Family::E8, n);
    ok = ok && suite_ok("PA.2", Family::E8, 3);
    double s = t.secs();
    criterion(6, "HT product suites exhaustive n<=2; trace associativity sampled n=3",
              ok && s < 1800.0, s);
  }

  // 7. Norm/rank ledger plus agreement of the two cubic-norm expressions on
  //    10^4 random rational elements (norm3 throws if they ever disagree).
  {
    Timer t;
    bool ok = true;
    for (int n = 1; n <= 2; ++n) {
      Algebra alg(make_spec(Family::E8, n));
      HTAlgebra ht(alg);
      ok = ok && ht.norm3(ht.identity()) == Rat(1) && ht.rank(ht.identity()) == 3;
      Element p12 = alg.gen(ht.scalars()[0]) + alg.gen(ht.scalars()[1]);
      ok = ok && ht.rank(p12) == 2 && ht.rank(alg.zero()) == 0;
      for (int b : ht.tip()) {
        bool scalar = b == ht.scalars()[0] || b == ht.scalars()[1] ||
                      b == ht.scalars()[2];
        if (scalar) continue;
        ok = ok && ht.sharp(alg.gen(b)).is_zero() &&
             ht.norm3(alg.gen(b)) == Rat(0);
      }
      Rng rng(Rng::derive(0, 0x4e4f524d33ULL));
      for (int trial = 0; trial < 10000 && ok; ++trial) {
        try {
          ht.norm3(random_tip_element(alg, ht, rng));
        } catch (const std::logic_error&) {
          ok = false;
        }
      }
      if (n == 2) break;
    }
    criterion(7, "norm/rank ledger and dual cubic-norm agreement on 1e4 elements",
              ok, t.secs());
  }

  // 8. HT-pair completion and the Jordan-pair collapse dichotomy.
  {
    Timer t;
    bool ok = suite_ok("P5.1", Family::E8, 1) && suite_ok("P5.1", Family::E8, 2);
    criterion(8, "pair idempotent completion n<=2; collapse holds at n=1, fails at n=2",
              ok, t.secs());
  }

  // 9. n=1 degeneration to the classical figures.
  {
    Timer t;
    Algebra alg(make_spec(Family::E8, 1));
    HTAlgebra ht(alg);
    Grading5 g = five_grading(alg.rs());
    bool ok = ht.tip_size() == 27 && g.grade(1).size() == 56;
    criterion(9, "n=1 degeneration: 27-dimensional tip, 56-dimensional g1", ok,
              t.secs());
  }

  std::printf("acceptance: %s (%d of 9 criteria failed)\n",
              g_failures == 0 ? "PASS" : "FAIL", g_failures);
  return g_failures == 0 ? 0 : 1;
}
