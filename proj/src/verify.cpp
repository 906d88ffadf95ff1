#include "magicstar/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <sstream>

#include "magicstar/rng.hpp"

namespace magicstar {

namespace {

void fail(SuiteReport& rep, const std::string& witness) {
  ++rep.failed;
  if (rep.witnesses.size() < kWitnessCap) rep.witnesses.push_back(witness);
}

void check(SuiteReport& rep, bool ok, const std::string& witness) {
  if (!ok) fail(rep, witness);
}

std::string note_count(const std::string& what, long long v) {
  return what + "=" + std::to_string(v);
}

// Per-suite deterministic stream salts.
std::uint64_t suite_salt(const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h;
}

// Sparse random element supported on the given root list, with small
// rational coefficients; at least one nonzero term.
Element random_element(const Algebra& alg, const std::vector<int>& roots,
                       Rng& rng, int terms) {
  Element x = alg.zero();
  while (x.is_zero())
    for (int t = 0; t < terms; ++t) {
      long long num = rng.range(-3, 3);
      if (num == 0) continue;
      x.add(alg.gen_index(roots[rng.below(roots.size())]),
            Rat(num, rng.range(1, 3)));
    }
  return x;
}

// ---------------------------------------------------------------- COUNTS

void suite_counts(const SuiteConfig& cfg, SuiteReport& rep) {
  rep.mode = "exhaustive";
  AlgebraSpec spec = make_spec(cfg.family, cfg.n);
  RootSystem rs = enumerate_roots(spec);
  const int N = spec.N;

  // Closed-form totals straight from the enumeration tables.
  long long orth, spin;
  if (cfg.family == Family::E8) {
    orth = 2LL * N * (N - 1);
    spin = 1LL << (N - 1);
  } else {
    orth = 6 + 2LL * (N - 6) * (N - 7) + 6LL * (2 * N - 11);
    spin = (1LL << (N - 5)) + 6LL * (1LL << (N - 6));
  }
  long long no = 0, ns = 0;
  for (const auto& r : rs.roots) (r.kind == RootKind::Orthogonal ? no : ns)++;
  rep.checked += 3;
  check(rep, no == orth, "orthogonal count " + std::to_string(no));
  check(rep, ns == spin, "spinor count " + std::to_string(ns));
  check(rep, rs.size() == orth + spin, "total count " + std::to_string(rs.size()));
  rep.notes.push_back(note_count("roots", rs.size()));

  for (const auto& r : rs.roots) {
    ++rep.checked;
    bool ok = true;
    // Norm dichotomy.
    Rat nn = rs.inner_roots(r.index, r.index);
    ok = ok && nn == (r.kind == RootKind::Orthogonal ? Rat(2) : Rat(cfg.n + 1));
    // Negation closure, consistent back-pointer.
    auto negIdx = rs.root_index(coords2_neg(r.coords2, N));
    ok = ok && negIdx && *negIdx == r.neg && rs.roots[r.neg].neg == r.index;
    // Integral decomposition round-trips.
    SimpleCoords sc = rs.decompose(r.coords2);
    ok = ok && rs.recompose(sc) == r.coords2;
    for (int i = 0; i < spec.R; ++i) ok = ok && sc.m[i] == r.simple[i];
    if (!ok) fail(rep, "root " + coords2_str(r.coords2, N));
  }
  rep.passed = rep.failed == 0;
}

// ------------------------------------------------------------ P2.1, P2.2

struct EpsCtx {
  const Algebra& alg;
  std::vector<std::uint32_t> mask, fold;

  explicit EpsCtx(const Algebra& a) : alg(a) {
    const auto& t = a.eps_table();
    mask.resize(a.rs().size());
    fold.resize(a.rs().size());
    for (int i = 0; i < a.rs().size(); ++i) {
      mask[i] = t.mask(i);
      fold[i] = t.fold_mask(mask[i]);
    }
  }
  static int sgn(std::uint32_t f, std::uint32_t m) {
    return std::popcount(f & m) & 1 ? -1 : 1;
  }
};

// Drives a pair visitor exhaustively for n <= 2, seeded-sampled otherwise.
template <class Visit>
void for_pairs(const SuiteConfig& cfg, const RootSystem& rs, SuiteReport& rep,
               std::uint64_t salt, Visit visit) {
  const int M = rs.size();
  if (cfg.n <= 2) {
    rep.mode = "exhaustive";
    for (int a = 0; a < M; ++a)
      for (int b = 0; b < M; ++b) {
        ++rep.checked;
        visit(a, b);
      }
  } else {
    rep.mode = "sampled";
    Rng rng(Rng::derive(cfg.seed, salt));
    for (long long t = 0; t < cfg.sample_budget; ++t) {
      ++rep.checked;
      visit(static_cast<int>(rng.below(M)), static_cast<int>(rng.below(M)));
    }
  }
}

void suite_p21(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  const RootSystem& rs = alg.rs();
  const int N = rs.spec.N, R = rs.spec.R, n = cfg.n;
  EpsCtx ctx(alg);
  const auto& sm = alg.sign_matrix();

  // Literal Eq-2.5 exponent on full integer coefficients: the oracle the
  // parity masks are checked against.
  auto eps_literal = [&](const SimpleCoords& a, const SimpleCoords& b) {
    long long e = 0;
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < R; ++j)
        if (sm.eps(i, j) == -1) e += a.m[i] * b.m[j];
    return (e & 1) ? -1 : 1;
  };
  // Property iii sign from the exponent (alpha,alpha)/2 - m_R^2 (n-1)/2,
  // asserting integrality first.
  auto iii_sign = [&](const Coords2& v, long long mR, bool& intOk) {
    long long sp = 0;
    for (int i = 0; i < N; ++i) sp += 1LL * v[i] * v[i];
    Rat e = Rat(sp, 8) - Rat(mR * mR * (n - 1), 2);
    intOk = e.is_integer();
    return (e.num() & 1) ? -1 : 1;
  };

  auto visit = [&](int a, int b) {
    const Root& A = rs.roots[a];
    const Root& B = rs.roots[b];
    int e_ab = ctx.sgn(ctx.fold[a], ctx.mask[b]);
    bool ok = true;
    // v) zero arguments.
    ok = ok && ctx.sgn(0, ctx.mask[b]) == 1 && ctx.sgn(ctx.fold[a], 0) == 1;
    // vi) vii) negated arguments.
    ok = ok && ctx.sgn(ctx.fold[A.neg], ctx.mask[b]) == e_ab;
    ok = ok && ctx.sgn(ctx.fold[a], ctx.mask[B.neg]) == e_ab;
    // The mask evaluation must agree with the literal Eq-2.5 product.
    SimpleCoords sa{std::vector<long long>(A.simple.begin(), A.simple.begin() + R)};
    SimpleCoords sb{std::vector<long long>(B.simple.begin(), B.simple.begin() + R)};
    ok = ok && eps_literal(sa, sb) == e_ab;
    // i) ii) biadditivity through an independent decomposition of the sum.
    Coords2 sum = coords2_add(A.coords2, B.coords2, N);
    SimpleCoords ss = rs.decompose(sum);
    std::uint32_t msum = 0;
    for (int i = 0; i < R; ++i)
      if (ss.m[i] & 1) msum |= 1u << i;
    std::uint32_t fsum = alg.eps_table().fold_mask(msum);
    int e_aa = ctx.sgn(ctx.fold[a], ctx.mask[a]);
    int e_ba = ctx.sgn(ctx.fold[b], ctx.mask[a]);
    ok = ok && ctx.sgn(fsum, ctx.mask[a]) == e_aa * e_ba;          // i
    ok = ok && ctx.sgn(ctx.fold[a], msum) == e_aa * e_ab;          // ii
    // iii) on the diagonal of alpha and of alpha+beta.
    bool int1 = false, int2 = false;
    ok = ok && iii_sign(A.coords2, A.simple[R - 1], int1) == e_aa && int1;
    ok = ok && iii_sign(sum, ss.m[R - 1], int2) == ctx.sgn(fsum, msum) && int2;
    // iv) symmetric product against the inner-product exponent.
    long long ip4 = 0;
    for (int i = 0; i < N; ++i) ip4 += 1LL * A.coords2[i] * B.coords2[i];
    Rat e4 = Rat(ip4, 4) - Rat(1LL * A.simple[R - 1] * B.simple[R - 1] * (n - 1));
    ok = ok && e4.is_integer() && ((e4.num() & 1) ? -1 : 1) == e_ab * e_ba;
    if (!ok)
      fail(rep, "pair " + coords2_str(A.coords2, N) + ", " +
                    coords2_str(B.coords2, N));
  };
  for_pairs(cfg, rs, rep, suite_salt("P2.1"), visit);
  rep.passed = rep.failed == 0;
}

void suite_p22(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  const RootSystem& rs = alg.rs();
  const int N = rs.spec.N;
  const auto& tbl = alg.eps_table();

  // i) diagonal on every root.
  for (const auto& r : rs.roots) {
    ++rep.checked;
    check(rep, tbl.eps(r.index, r.index) == -1,
          "eps(a,a) != -1 at " + coords2_str(r.coords2, N));
  }
  auto visit = [&](int a, int b) {
    const Root& A = rs.roots[a];
    const Root& B = rs.roots[b];
    int e_ab = tbl.eps(a, b);
    bool ok = true;
    auto sumIdx = rs.root_index(coords2_add(A.coords2, B.coords2, N));
    if (sumIdx) {
      ok = ok && e_ab == -tbl.eps(b, a);        // ii) antisymmetry
      ok = ok && e_ab == tbl.eps(b, *sumIdx);   // iii) cocycle shift
    }
    auto difIdx = rs.root_index(coords2_add(A.coords2, rs.roots[B.neg].coords2, N));
    if (difIdx) ok = ok && e_ab == tbl.eps(b, *difIdx);  // iv)
    if (!ok)
      fail(rep, "pair " + coords2_str(A.coords2, N) + ", " +
                    coords2_str(B.coords2, N));
  };
  for_pairs(cfg, rs, rep, suite_salt("P2.2"), visit);
  rep.passed = rep.failed == 0;
}

// ------------------------------------------------------------ P3.1, P3.2

void suite_p31(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  const RootSystem& rs = alg.rs();
  const int N = rs.spec.N, R = rs.spec.R;
  MagicStarPartition p = partition(rs);  // throws on any count mismatch
  CellCounts want = cell_counts(rs.spec);

  rep.checked += 13;
  check(rep, static_cast<long long>(p.center.size()) == want.center, "center size");
  for (const auto& t : p.tips)
    check(rep, static_cast<long long>(t.size()) == want.tip, "tip size");
  rep.notes.push_back(note_count("tip", want.tip));
  rep.notes.push_back(note_count("center", want.center));

  // Tip triviality: [T,T] = 0 generator by generator.
  Terms buf;
  for (const auto& t : p.tips)
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i; j < t.size(); ++j) {
        ++rep.checked;
        buf.clear();
        alg.bracket_basis(alg.gen_index(t[i]), alg.gen_index(t[j]), buf);
        check(rep, buf.empty(),
              "nonzero tip bracket at " + coords2_str(rs.roots[t[i]].coords2, N) +
                  ", " + coords2_str(rs.roots[t[j]].coords2, N));
      }

  // 3-grading closure for all six axes.
  rep.mode = cfg.n <= 2 ? "exhaustive" : "sampled";
  Rng rng(Rng::derive(cfg.seed, suite_salt("P3.1")));
  for (Charge axis : kTipCharges) {
    Grading3 g = three_grading(rs, axis);
    std::vector<std::int8_t> grade(alg.dim(), 9);
    std::vector<BasisIndex> members;
    for (int i = 0; i < R; ++i) { grade[i] = 0; members.push_back(i); }
    auto label = [&](const std::vector<int>& idx, int gr) {
      for (int r : idx) {
        grade[alg.gen_index(r)] = static_cast<std::int8_t>(gr);
        members.push_back(alg.gen_index(r));
      }
    };
    label(g.center, 0);
    label(g.plus, 1);
    label(g.minus, -1);
    const std::size_t M = members.size();
    auto closure = [&](BasisIndex a, BasisIndex b) {
      ++rep.checked;
      buf.clear();
      alg.bracket_basis(a, b, buf);
      int want_g = grade[a] + grade[b];
      for (const auto& [t, c] : buf)
        if (grade[t] != want_g)
          fail(rep, "3-grading leak: [" + alg.basis_name(a) + ", " +
                        alg.basis_name(b) + "]");
    };
    if (cfg.n <= 2) {
      for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = i; j < M; ++j) closure(members[i], members[j]);
    } else {
      for (long long t = 0; t < cfg.sample_budget / 6; ++t)
        closure(members[rng.below(M)], members[rng.below(M)]);
    }
  }
  rep.passed = rep.failed == 0;
}

void suite_p32(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  const RootSystem& rs = alg.rs();
  const int R = rs.spec.R;
  Grading5 g = five_grading(rs);

  rep.checked += 3;
  check(rep, g.grade(2).size() == 1 && g.grade(-2).size() == 1,
        "contact extremes not one-dimensional");
  long long tip = cell_counts(rs.spec).tip;
  check(rep, static_cast<long long>(g.grade(1).size()) == 2 * tip + 2,
        "dim g_1 = " + std::to_string(g.grade(1).size()));
  check(rep, g.grade(1).size() == g.grade(-1).size(), "g_1 / g_-1 asymmetry");
  rep.notes.push_back(note_count("dim_g1", g.grade(1).size()));

  // Closure [g_a, g_b] in g_{a+b} with grades read off the r-charge.
  std::vector<std::int8_t> grade(alg.dim(), 0);
  for (const auto& r : rs.roots) grade[alg.gen_index(r.index)] = r.r;
  Terms buf;
  auto closure = [&](BasisIndex a, BasisIndex b) {
    ++rep.checked;
    buf.clear();
    alg.bracket_basis(a, b, buf);
    int want_g = grade[a] + grade[b];
    for (const auto& [t, c] : buf) {
      bool ok = want_g >= -2 && want_g <= 2 && grade[t] == want_g;
      if (!ok)
        fail(rep, "5-grading leak: [" + alg.basis_name(a) + ", " +
                      alg.basis_name(b) + "]");
    }
  };
  const int D = alg.dim();
  if (cfg.n <= 2) {
    rep.mode = "exhaustive";
    for (int a = 0; a < D; ++a)
      for (int b = a; b < D; ++b) closure(a, b);
  } else {
    rep.mode = "sampled";
    Rng rng(Rng::derive(cfg.seed, suite_salt("P3.2")));
    for (long long t = 0; t < cfg.sample_budget; ++t)
      closure(static_cast<int>(rng.below(D)), static_cast<int>(rng.below(D)));
  }
  rep.passed = rep.failed == 0;
}

// ----------------------------------------------------------------- D3.2

void suite_d32(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  const RootSystem& rs = alg.rs();
  const int N = rs.spec.N;
  Grading5 g = five_grading(rs);
  const auto& g1 = g.grade(1);
  const int d = static_cast<int>(g1.size());
  const Coords2& rho = rs.roots[g.rho_plus].coords2;

  // Symplectic form over the g_1 generator basis: lands on the x_rho line,
  // antisymmetric, and equals eps(alpha,beta) when alpha+beta = rho.
  rep.mode = cfg.n <= 2 ? "exhaustive" : "sampled";
  Terms buf;
  auto form = [&](int i, int j) {
    buf.clear();
    alg.bracket_basis(alg.gen_index(g1[i]), alg.gen_index(g1[j]), buf);
    Rat val;
    bool ok = true;
    for (const auto& [t, c] : buf) {
      if (t == alg.gen_index(g.rho_plus)) val = c;
      else ok = false;
    }
    Coords2 sum = coords2_add(rs.roots[g1[i]].coords2, rs.roots[g1[j]].coords2, N);
    if (sum == rho) ok = ok && val == Rat(alg.eps(g1[i], g1[j]));
    else ok = ok && val.is_zero();
    if (!ok)
      fail(rep, "symplectic defect at pair (" + std::to_string(g1[i]) + "," +
                    std::to_string(g1[j]) + ")");
    return val;
  };
  Rng srng(Rng::derive(cfg.seed, suite_salt("D3.2-symplectic")));
  if (cfg.n <= 2) {
    std::vector<std::vector<Rat>> gram(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        ++rep.checked;
        gram[i][j] = form(i, j);
      }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        ++rep.checked;
        check(rep, gram[i][j] == -gram[j][i], "symplectic antisymmetry");
      }
    if (cfg.n == 1) {
      ++rep.checked;
      int rank = matrix_rank(gram);
      check(rep, rank == d, "Gram rank " + std::to_string(rank));
      rep.notes.push_back(note_count("gram_rank", rank));
    }
  } else {
    for (long long t = 0; t < cfg.sample_budget; ++t) {
      ++rep.checked;
      int i = static_cast<int>(srng.below(d)), j = static_cast<int>(srng.below(d));
      check(rep, form(i, j) == -form(j, i), "symplectic antisymmetry");
    }
  }

  // Triple product on tips: (x,x,x) = -(alpha,alpha) x.
  if (cfg.n <= 2) {
    MagicStarPartition p = partition(rs);
    for (Charge tip : kTipCharges)
      for (int rIdx : p.tip(tip)) {
        ++rep.checked;
        Element x = alg.gen(rIdx);
        Element got = triple_product_T(alg, tip, x, x, x);
        Element wantE = x * (-rs.inner_roots(rIdx, rIdx));
        check(rep, got == wantE, "triple product defect at root " +
                                     coords2_str(rs.roots[rIdx].coords2, N));
      }
  }

  // Quartic form: diagonal chain equals the S4-symmetrized average, and
  // vanishes on basis 4-tuples whose coordinate sum misses rho.
  Rng rng(Rng::derive(cfg.seed, suite_salt("D3.2")));
  int trials = cfg.n <= 2 ? 20 : 4;
  for (int t = 0; t < trials; ++t) {
    ++rep.checked;
    Element x = random_element(alg, g1, rng, 6);
    check(rep, quartic_diagonal(alg, g, x) == quartic_form(alg, g, x, x, x, x),
          "quartic diagonal/symmetrized mismatch");
  }
  bool found_nonzero = false;
  for (int t = 0; t < 4000 && cfg.n == 1; ++t) {
    Element a = alg.gen(g1[rng.below(d)]), b = alg.gen(g1[rng.below(d)]);
    Element c = alg.gen(g1[rng.below(d)]), e = alg.gen(g1[rng.below(d)]);
    if (!quartic_form(alg, g, a, b, c, e).is_zero()) { found_nonzero = true; break; }
  }
  if (cfg.n == 1) {
    ++rep.checked;
    check(rep, found_nonzero, "no nonzero quartic value found on basis 4-tuples");
  }
  for (int t = 0; t < 200; ++t) {
    int i1 = static_cast<int>(rng.below(d)), i2 = static_cast<int>(rng.below(d));
    int i3 = static_cast<int>(rng.below(d)), i4 = static_cast<int>(rng.below(d));
    Coords2 sum = rs.roots[g1[i1]].coords2;
    for (int k : {i2, i3, i4}) sum = coords2_add(sum, rs.roots[g1[k]].coords2, N);
    if (sum == rho) continue;
    ++rep.checked;
    check(rep, quartic_form(alg, g, alg.gen(g1[i1]), alg.gen(g1[i2]),
                            alg.gen(g1[i3]), alg.gen(g1[i4]))
                   .is_zero(),
          "quartic nonzero off the rho fiber");
  }
  rep.passed = rep.failed == 0;
}

// --------------------------------------------------------------- JACOBI

void suite_jacobi(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  auto witness_str = [&](const JacobiReport::Witness& w) {
    std::ostringstream os;
    os << "(" << alg.basis_name(w.a) << ", " << alg.basis_name(w.b) << ", "
       << alg.basis_name(w.c) << ") support=" << w.support
       << " spinors=" << w.spinor_generators;
    return os.str();
  };
  if (cfg.n == 1) {
    rep.mode = "exhaustive";
    JacobiReport jr = jacobi_scan_exhaustive(alg, JacobiScanKind::Full, kWitnessCap);
    rep.checked = jr.triples_checked;
    rep.failed = jr.violations;
    for (const auto& w : jr.witnesses) rep.witnesses.push_back(witness_str(w));
    rep.passed = rep.failed == 0;
    return;
  }
  rep.mode = "sampled";
  JacobiReport jr = jacobi_scan_sampled(alg, cfg.sample_budget,
                                        Rng::derive(cfg.seed, suite_salt("JACOBI")),
                                        kWitnessCap);
  rep.checked = jr.triples_checked;
  rep.failed = jr.violations;  // the measurement: must be > 0 for n >= 2
  bool spin_ok = true;
  for (const auto& w : jr.witnesses) {
    rep.witnesses.push_back(witness_str(w));
    spin_ok = spin_ok && w.spinor_generators >= 2;
  }
  rep.notes.push_back(note_count("violations", jr.violations));
  bool restricted_ok = true;
  if (cfg.n == 2) {
    JacobiReport ro = jacobi_scan_exhaustive(alg, JacobiScanKind::OrthogonalOnly,
                                             kWitnessCap);
    restricted_ok = ro.violations == 0;
    rep.notes.push_back(note_count("orthogonal_only_violations", ro.violations));
    rep.notes.push_back(note_count("orthogonal_only_triples", ro.triples_checked));
  }
  rep.passed = rep.failed > 0 && spin_ok && restricted_ok;
}

// ------------------------------------------------------ P4.1, LA.1, PA.2

void suite_p41(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  HTAlgebra ht(alg, cfg.vertex);
  const RootSystem& rs = alg.rs();
  const int N = rs.spec.N;
  const auto& tip = ht.tip();
  const int T = ht.tip_size();
  rep.mode = cfg.n <= 2 ? "exhaustive" : "sampled";

  // Commutativity of circ on all generator pairs (cheap at every n).
  Terms u, v;
  for (int i = 0; i < T; ++i)
    for (int j = i + 1; j < T; ++j) {
      ++rep.checked;
      u.clear();
      v.clear();
      ht.circ_basis(tip[i], tip[j], u);
      ht.circ_basis(tip[j], tip[i], v);
      std::sort(u.begin(), u.end());
      std::sort(v.begin(), v.end());
      check(rep, u == v, "circ not commutative at pair (" +
                             std::to_string(tip[i]) + "," + std::to_string(tip[j]) + ")");
    }

  // Identity, idempotents, nilpotency and tracelessness.
  auto is_scalar = [&](int r) {
    const auto& s = ht.scalars();
    return r == s[0] || r == s[1] || r == s[2];
  };
  for (int i = 0; i < T; ++i) {
    ++rep.checked;
    Element xb = alg.gen(tip[i]);
    bool ok = ht.circ(ht.identity(), xb) == xb;
    if (is_scalar(tip[i])) {
      ok = ok && ht.circ(xb, xb) == xb && ht.trace(xb) == Rat(1);
    } else {
      ok = ok && ht.circ(xb, xb).is_zero() && ht.trace(xb).is_zero();
    }
    if (!ok) fail(rep, "unit/idempotent defect at root " +
                           coords2_str(rs.roots[tip[i]].coords2, N));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      ++rep.checked;
      check(rep, ht.circ(alg.gen(ht.scalars()[i]), alg.gen(ht.scalars()[j])).is_zero(),
            "distinct scalar idempotents not orthogonal");
    }

  // The scalars commute with the whole d_{4n} block of Phi_O.
  Terms buf;
  for (const auto& r : rs.roots) {
    if (r.kind != RootKind::Orthogonal) continue;
    bool inner_block = true;
    for (int i : {0, 1, 2, N - 1}) inner_block = inner_block && r.coords2[i] == 0;
    if (!inner_block) continue;
    for (int s : ht.scalars()) {
      ++rep.checked;
      buf.clear();
      alg.bracket_basis(alg.gen_index(s), alg.gen_index(r.index), buf);
      check(rep, buf.empty(), "scalar moved by d-block generator " +
                                  coords2_str(r.coords2, N));
    }
  }

  // tr(x^#) = -1/2 (tr(x^2) - tr(x)^2) on random elements.
  Rng rng(Rng::derive(cfg.seed, suite_salt("P4.1")));
  int trials = cfg.n <= 2 ? 1000 : 100;
  for (int t = 0; t < trials; ++t) {
    ++rep.checked;
    Element x = random_element(alg, tip, rng, 8);
    Rat tx = ht.trace(x), tx2 = ht.trace(ht.circ(x, x));
    check(rep, ht.trace(ht.sharp(x)) == -(tx2 - tx * tx) / Rat(2),
          "tr(sharp) identity failed");
  }

  // ad_{I^-} acts as a derivation on tip pairs.
  auto derivation = [&](int a, int b) {
    ++rep.checked;
    Element xa = alg.gen(a), xb = alg.gen(b);
    Element lhs = alg.bracket(ht.i_minus(), alg.bracket(xa, xb));
    Element rhs = alg.bracket(alg.bracket(ht.i_minus(), xa), xb) +
                  alg.bracket(xa, alg.bracket(ht.i_minus(), xb));
    check(rep, lhs == rhs, "ad_{I^-} not a derivation at pair (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
  };
  if (cfg.n <= 2) {
    for (int i = 0; i < T; ++i)
      for (int j = i; j < T; ++j) derivation(tip[i], tip[j]);
  } else {
    for (long long t = 0; t < cfg.sample_budget / 10; ++t)
      derivation(tip[rng.below(T)], tip[rng.below(T)]);
  }
  rep.passed = rep.failed == 0;
}

void suite_la1(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  HTAlgebra ht(alg, cfg.vertex);
  rep.mode = "exhaustive";
  const int M = ht.vector_mu_count();

  Element half_p12 = (alg.gen(ht.scalars()[0]) + alg.gen(ht.scalars()[1])) * Rat(1, 2);
  // i) scalar products.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ++rep.checked;
      Element want = i == j ? alg.gen(ht.scalars()[i]) : alg.zero();
      check(rep, ht.circ(alg.gen(ht.scalars()[i]), alg.gen(ht.scalars()[j])) == want,
            "Pi o Pj defect");
    }
  // ii) scalar times any generator.
  for (int i = 0; i < 3; ++i)
    for (int b : ht.tip()) {
      ++rep.checked;
      Element want = alg.gen(b) * (alg.rs().inner_roots(ht.scalars()[i], b) / Rat(2));
      check(rep, ht.circ(alg.gen(ht.scalars()[i]), alg.gen(b)) == want,
            "Pi o x_beta defect");
    }
  // iii) - v) vector products with the twisted sign convention.
  for (int mu = 0; mu < M; ++mu)
    for (int nu = 0; nu < M; ++nu)
      for (int ca : {1, -1})
        for (int cb : {1, -1}) {
          ++rep.checked;
          Element got = ht.circ(ht.vector_basis(mu, ca), ht.vector_basis(nu, cb));
          Element want = (ca != cb && mu == nu) ? half_p12 : alg.zero();
          check(rep, got == want,
                "vector product defect at (mu,nu,chir)=(" + std::to_string(mu) +
                    "," + std::to_string(nu) + "," + std::to_string(ca) +
                    std::to_string(cb) + ")");
        }
  rep.passed = rep.failed == 0;
}

void suite_pa2(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  HTAlgebra ht(alg, cfg.vertex);
  const auto& tip = ht.tip();
  const int T = ht.tip_size();

  if (cfg.n <= 2) {
    rep.mode = "exhaustive";
    // Dense circ and trace-form tables in tip-position space, then a pure
    // table-lookup sweep over all ordered triples.
    std::vector<Rat> tf = ht.trace_form_table();
    std::vector<std::vector<std::pair<int, Rat>>> circ(static_cast<std::size_t>(T) * T);
    Terms buf;
    for (int a = 0; a < T; ++a)
      for (int b = 0; b < T; ++b) {
        buf.clear();
        ht.circ_basis(tip[a], tip[b], buf);
        auto& cell = circ[static_cast<std::size_t>(a) * T + b];
        for (const auto& [t, c] : buf) cell.emplace_back(ht.tip_pos(alg.root_of(t)), c);
      }
    for (int a = 0; a < T; ++a)
      for (int b = 0; b < T; ++b) {
        const auto& ab = circ[static_cast<std::size_t>(a) * T + b];
        for (int c = 0; c < T; ++c) {
          ++rep.checked;
          Rat tr1, tr2;
          for (const auto& [t, w] : ab) tr1 += w * tf[static_cast<std::size_t>(t) * T + c];
          for (const auto& [t, w] : circ[static_cast<std::size_t>(b) * T + c])
            tr2 += w * tf[static_cast<std::size_t>(a) * T + t];
          if (tr1 != tr2)
            fail(rep, "trace associativity defect at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
  } else {
    rep.mode = "sampled";
    // Stratified by scalar/vector/spinor class per slot.
    std::vector<int> klass[3];
    for (int s : ht.scalars()) klass[0].push_back(s);
    for (int mu = 0; mu < ht.vector_mu_count(); ++mu)
      for (int ch : {1, -1}) klass[1].push_back(ht.vector_root(mu, ch));
    for (int s : ht.spinors_plus()) klass[2].push_back(s);
    for (int s : ht.spinors_minus()) klass[2].push_back(s);
    Terms buf;
    long long per = cfg.sample_budget / 27;
    for (int sa = 0; sa < 3; ++sa)
      for (int sb = 0; sb < 3; ++sb)
        for (int sc = 0; sc < 3; ++sc) {
          Rng rng(Rng::derive(cfg.seed, suite_salt("PA.2") + 9 * sa + 3 * sb + sc));
          for (long long t = 0; t < per; ++t) {
            int a = klass[sa][rng.below(klass[sa].size())];
            int b = klass[sb][rng.below(klass[sb].size())];
            int c = klass[sc][rng.below(klass[sc].size())];
            ++rep.checked;
            Rat tr1, tr2;
            buf.clear();
            ht.circ_basis(a, b, buf);
            for (const auto& [u, w] : buf)
              tr1 += w * ht.trace_form_basis(alg.root_of(u), c);
            buf.clear();
            ht.circ_basis(b, c, buf);
            for (const auto& [u, w] : buf)
              tr2 += w * ht.trace_form_basis(a, alg.root_of(u));
            if (tr1 != tr2)
              fail(rep, "trace associativity defect at roots (" + std::to_string(a) +
                            "," + std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
  }
  rep.passed = rep.failed == 0;
}

void suite_la3(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  HTAlgebra ht(alg, cfg.vertex);
  std::vector<int> vecs, spins;
  for (int mu = 0; mu < ht.vector_mu_count(); ++mu)
    for (int ch : {1, -1}) vecs.push_back(ht.vector_root(mu, ch));
  spins = ht.spinors_plus();
  spins.insert(spins.end(), ht.spinors_minus().begin(), ht.spinors_minus().end());

  Terms buf;
  auto vss = [&](int v, int s1, int s2) {
    ++rep.checked;
    Rat tr1, tr2;
    buf.clear();
    ht.circ_basis(v, s1, buf);
    for (const auto& [u, w] : buf) tr1 += w * ht.trace_form_basis(alg.root_of(u), s2);
    buf.clear();
    ht.circ_basis(s1, s2, buf);
    for (const auto& [u, w] : buf) tr2 += w * ht.trace_form_basis(v, alg.root_of(u));
    if (tr1 != tr2)
      fail(rep, "VSS defect at (" + std::to_string(v) + "," + std::to_string(s1) +
                    "," + std::to_string(s2) + ")");
  };
  if (cfg.n <= 2) {
    rep.mode = "exhaustive";
    for (int v : vecs)
      for (int s1 : spins)
        for (int s2 : spins) vss(v, s1, s2);
  } else {
    rep.mode = "sampled";
    Rng rng(Rng::derive(cfg.seed, suite_salt("LA.3")));
    for (long long t = 0; t < cfg.sample_budget; ++t)
      vss(vecs[rng.below(vecs.size())], spins[rng.below(spins.size())],
          spins[rng.below(spins.size())]);
  }
  rep.passed = rep.failed == 0;
}

// ----------------------------------------------------------------- P5.1

void suite_p51(const SuiteConfig& cfg, SuiteReport& rep) {
  Algebra alg(make_spec(cfg.family, cfg.n));
  HTPair pair(alg, cfg.vertex);
  const auto& plus = pair.plus_tip();
  const auto& minus = pair.minus_tip();
  rep.mode = cfg.n <= 2 ? "exhaustive" : "sampled";

  // Idempotent completion for every tip generator (both conditions are
  // verified inside complete_idempotent).
  for (int r : plus) {
    ++rep.checked;
    try {
      pair.complete_idempotent(r);
    } catch (const std::exception& e) {
      fail(rep, std::string("completion failed at root ") + std::to_string(r) +
                    ": " + e.what());
    }
  }

  // V_{x,y} x = 2 U_x y on seeded random rational triples.
  Rng rng(Rng::derive(cfg.seed, suite_salt("P5.1")));
  long long vu_trials = std::min<long long>(cfg.sample_budget, 100000);
  for (long long t = 0; t < vu_trials; ++t) {
    ++rep.checked;
    Element x = random_element(alg, plus, rng, 3);
    Element y = random_element(alg, minus, rng, 3);
    if (!(pair.v_op(x, y, x) == pair.u_op(x, y) * Rat(2))) {
      fail(rep, "V_{x,y}x != 2 U_x y at trial " + std::to_string(t));
    }
  }

  // Jordan-pair collapse V = [[x,y],z]: identity at n=1, measured failure
  // set at n >= 2.
  long long collapse_fail = 0, collapse_checked = 0;
  auto collapse = [&](int xi, int yi, int zi) {
    ++collapse_checked;
    Element x = alg.gen(xi), y = alg.gen(yi), z = alg.gen(zi);
    Element direct = alg.bracket(alg.bracket(x, y), z);
    if (!(pair.v_op(x, y, z) == direct)) {
      ++collapse_fail;
      if (cfg.n == 1)
        fail(rep, "Jordan collapse failed at n=1 triple (" + std::to_string(xi) +
                      "," + std::to_string(yi) + "," + std::to_string(zi) + ")");
    }
  };
  if (cfg.n <= 2) {
    for (int xi : plus)
      for (int yi : minus)
        for (int zi : plus) collapse(xi, yi, zi);
  } else {
    for (long long t = 0; t < cfg.sample_budget; ++t)
      collapse(plus[rng.below(plus.size())], minus[rng.below(minus.size())],
               plus[rng.below(plus.size())]);
  }
  rep.checked += collapse_checked;
  rep.notes.push_back(note_count("collapse_triples", collapse_checked));
  rep.notes.push_back(note_count("collapse_failures", collapse_fail));
  rep.passed = rep.failed == 0 && (cfg.n == 1 ? collapse_fail == 0 : collapse_fail > 0);
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "P2.1", "P2.2", "P3.1", "P3.2", "D3.2", "P4.1",
      "LA.1", "PA.2", "LA.3", "P5.1", "JACOBI", "COUNTS"};
  return ids;
}

bool is_suite_id(const std::string& id) {
  const auto& ids = suite_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SuiteReport run_suite(const std::string& id, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.id = id;
  auto start = std::chrono::steady_clock::now();
  if (id == "COUNTS") suite_counts(cfg, rep);
  else if (id == "P2.1") suite_p21(cfg, rep);
  else if (id == "P2.2") suite_p22(cfg, rep);
  else if (id == "P3.1") suite_p31(cfg, rep);
  else if (id == "P3.2") suite_p32(cfg, rep);
  else if (id == "D3.2") suite_d32(cfg, rep);
  else if (id == "JACOBI") suite_jacobi(cfg, rep);
  else if (id == "P4.1") suite_p41(cfg, rep);
  else if (id == "LA.1") suite_la1(cfg, rep);
  else if (id == "PA.2") suite_pa2(cfg, rep);
  else if (id == "LA.3") suite_la3(cfg, rep);
  else if (id == "P5.1") suite_p51(cfg, rep);
  else throw unknown_suite_error("unknown suite ID: " + id);
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace magicstar
