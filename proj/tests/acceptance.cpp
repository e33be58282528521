// Acceptance run: one PASS/FAIL line per criterion with its time budget.
// Exit status is 0 only when every line passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "hopfforge/deformation.hpp"

using namespace hopfforge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  int checks = 0;
  std::vector<std::string> failures;
  double worst_unit = 0;  // largest per-m or per-family time, when the budget is per unit

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void expect(const Report& r, const std::string& what) {
    ++checks;
    if (!r.ok()) {
      std::string w = what;
      for (const auto& c : r.checks)
        if (!c.pass) {
          w += ": " + c.name + (c.witness.empty() ? "" : " [" + c.witness + "]");
          break;
        }
      failures.push_back(w);
    }
  }
};

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.code();
  }
  return "ok";
}

std::string show(const std::vector<IndexPair>& I, const std::vector<int>& L = {}) {
  std::string s;
  for (auto [i, k] : I) s += "(" + std::to_string(i) + "," + std::to_string(k) + ")";
  for (int l : L) s += "[" + std::to_string(l) + "]";
  return s;
}

bool is_identity(const Mat& A) { return A == Mat::identity(A.rows()); }

Bilinear elementary(int dim, int a, int b) {
  Bilinear f(dim);
  f.rows[a] = SVec::unit(b);
  if (a != b) f.rows[b] = SVec::unit(a);
  return f;
}

// ------------------------------------------------------------------ 1

void c1(Outcome& o) {
  for (int m : {12, 16}) {
    auto t0 = Clock::now();
    auto g = GroupDatum::make(m);
    FunctionAlgebra F = build_function_algebra(g);
    const std::string tag = "m=" + std::to_string(m);
    o.expect(verify_hopf(F.phi), tag + " verify_hopf phi basis");
    o.expect(verify_hopf(F.theta), tag + " verify_hopf theta basis");
    o.expect(theta_identities(F), tag + " theta identities");
    auto gl = group_likes(F.phi);
    o.expect(gl.size() == 4, tag + " group-likes");
    for (int c = 0; c < 4; ++c)
      o.expect(std::find(gl.begin(), gl.end(), character(F, c)) != gl.end(), tag + " character is group-like");
    o.expect(verify_dual_is_group_algebra(F), tag + " dual is kD_m");
    o.expect(verify_hopf(build_group_algebra(g)), tag + " kD_m");
    o.worst_unit = std::max(o.worst_unit, seconds_since(t0));
  }
}

// ------------------------------------------------------------------ 2

void c2(Outcome& o) {
  {
    auto g = GroupDatum::make(12);
    o.expect(enumerate_J(g).size() == 7, "|J| = 7 at m = 12");
  }
  for (int m : {12, 16}) {
    auto g = GroupDatum::make(m);
    const std::string tag = "m=" + std::to_string(m) + " ";
    // w^(ik) = -1 iff ik = m/2 mod m, 0 < i < m/2
    std::vector<IndexPair> J;
    for (int i = 1; i < m / 2; ++i)
      for (int k = 1; k < m; ++k)
        if ((i * k) % m == m / 2) J.emplace_back(i, k);
    o.expect(enumerate_J(g) == J, tag + "J matches the exponent oracle");
    std::set<IndexPair> Jset(J.begin(), J.end());
    for (int i = 0; i <= m; ++i)
      for (int k = 0; k <= m; ++k)
        if (!Jset.count({i, k}))
          o.expect(code_of([&] { validate_I(g, {{i, k}}); }) == "NotInJ", tag + "NotInJ " + show({{i, k}}));

    // rank-2 I: compatible iff i k' + i' k = 0 mod m
    std::set<std::vector<IndexPair>> listed;
    for (const auto& I : enumerate_I(g, 2)) {
      listed.insert(I.pairs);
      o.expect(code_of([&] { validate_I(g, I.pairs); }) == "ok", tag + "re-validate I " + show(I.pairs));
    }
    for (std::size_t a = 0; a < J.size(); ++a) {
      o.expect(listed.count({J[a]}) == 1, tag + "rank-1 I listed " + show({J[a]}));
      for (std::size_t b = a; b < J.size(); ++b) {
        std::vector<IndexPair> I{J[a], J[b]};
        const bool compatible = (J[a].first * J[b].second + J[b].first * J[a].second) % m == 0;
        o.expect(listed.count(I) == (compatible ? 1u : 0u), tag + "I listed iff compatible " + show(I));
        o.expect(code_of([&] { validate_I(g, I); }) == (compatible ? "ok" : "CompatibilityFailed"),
                 tag + "I verdict " + show(I));
      }
    }

    for (const auto& L : enumerate_L(g, 2))
      o.expect(code_of([&] { validate_L(g, L.ells); }) == "ok", tag + "re-validate L");
    for (int l = -1; l <= g.n + 1; ++l) {
      std::string expect = (l <= 0 || l >= g.n) ? "EllOutOfRange" : (l % 2 == 0 ? "EllNotOdd" : "ok");
      o.expect(code_of([&] { validate_L(g, {l}); }) == expect, tag + "L verdict " + std::to_string(l));
    }

    std::set<std::pair<IndexPair, int>> Klisted;
    for (const auto& K : enumerate_K(g, 2)) {
      o.expect(code_of([&] { validate_K(g, K.I.pairs, K.L.ells); }) == "ok",
               tag + "re-validate K " + show(K.I.pairs, K.L.ells));
      Klisted.insert({K.I.pairs[0], K.L.ells[0]});
    }
    for (auto p : J)
      for (int l = 1; l < g.n; l += 2) {
        std::string got = code_of([&] { validate_K(g, {p}, {l}); });
        std::string expect = Klisted.count({p, l}) ? "ok" : (p.second % 2 == 0 ? "KNotOdd" : "MixedConditionFailed");
        o.expect(got == expect, tag + "K verdict " + show({p}, {l}) + " got " + got);
      }
  }
}

// ------------------------------------------------------------------ 3

void c3(Outcome& o) {
  for (int m : {12, 16}) {
    auto g = GroupDatum::make(m);
    const std::string tag = "m=" + std::to_string(m) + " ";
    std::vector<YDModule> simple;
    for (auto [i, k] : enumerate_J(g)) {
      for (HBasis b : {HBasis::Theta, HBasis::Phi})
        o.expect(verify_yd(build_M_ik(g, i, k, b)), tag + "M" + show({{i, k}}));
      simple.push_back(build_M_ik(g, i, k));
      o.expect(same_structure(dual_transport(g, group_M_ik(g, i, k)), simple.back()),
               tag + "dual transport M" + show({{i, k}}));
    }
    for (int l = 1; l < g.n; l += 2) {
      for (HBasis b : {HBasis::Theta, HBasis::Phi})
        o.expect(verify_yd(build_M_ell(g, l, b)), tag + "M_" + std::to_string(l));
      simple.push_back(build_M_ell(g, l));
      o.expect(same_structure(dual_transport(g, group_M_ell(g, l)), simple.back()),
               tag + "dual transport M_" + std::to_string(l));
    }
    for (const auto& I : enumerate_I(g, 2)) {
      YDModule M = build_M_I(g, I);
      o.expect(verify_yd(M), tag + "M_I " + show(I.pairs));
      o.expect(is_identity(braiding(M, M) * braiding(M, M)), tag + "c^2 = id on M_I " + show(I.pairs));
    }
    for (const auto& L : enumerate_L(g, 2)) {
      YDModule M = build_M_L(g, L);
      o.expect(verify_yd(M), tag + "M_L " + show({}, L.ells));
      o.expect(is_identity(braiding(M, M) * braiding(M, M)), tag + "c^2 = id on M_L " + show({}, L.ells));
    }
    for (const auto& K : enumerate_K(g, 2)) {
      YDModule M = build_M_IL(g, K);
      o.expect(verify_yd(M), tag + "M_IL " + show(K.I.pairs, K.L.ells));
      o.expect(is_identity(braiding(M, M) * braiding(M, M)), tag + "c^2 = id on M_IL");
    }
    // admissible pairs of simple summands: those that occur together in a valid datum
    const auto J = enumerate_J(g);
    const int nJ = static_cast<int>(J.size());
    auto admissible = [&](std::size_t a, std::size_t b) {
      const bool ya = static_cast<int>(a) < nJ, yb = static_cast<int>(b) < nJ;
      try {
        if (ya && yb) validate_I(g, {J[a], J[b]});
        else if (!ya && !yb) return true;
        else if (ya) validate_K(g, {J[a]}, {2 * static_cast<int>(b - nJ) + 1});
        else validate_K(g, {J[b]}, {2 * static_cast<int>(a - nJ) + 1});
      } catch (const ValidationError&) {
        return false;
      }
      return true;
    };
    for (std::size_t a = 0; a < simple.size(); ++a)
      for (std::size_t b = 0; b < simple.size(); ++b)
        if (admissible(a, b))
          o.expect(is_identity(braiding(simple[a], simple[b]) * braiding(simple[b], simple[a])),
                   tag + "c_{M,N} c_{N,M} = id " + simple[a].labels[0] + " " + simple[b].labels[0]);
  }
}

// ------------------------------------------------------------------ 4

void c4(Outcome& o) {
  auto g = GroupDatum::make(12);
  auto nichols_checks = [&](const YDModule& M, const std::string& tag) {
    NicholsData B = build_nichols(M);
    o.expect(B.dim == 1L << (2 * (M.dim / 2)), tag + " dim B = 4^rank");
    o.expect(braided_primitives(B).dim() == M.dim, tag + " P(B) = M");
    o.expect(verify_nichols(B), tag + " Nichols axioms");
    return B;
  };
  for (const auto& I : enumerate_I(g, 2)) nichols_checks(build_M_I(g, I), show(I.pairs));
  for (const auto& L : enumerate_L(g, 2)) nichols_checks(build_M_L(g, L), show({}, L.ells));
  for (const auto& K : enumerate_K(g, 2)) nichols_checks(build_M_IL(g, K), show(K.I.pairs, K.L.ells));

  auto boson = [&](const YDModule& M, const std::string& tag, int dim, bool generic_coradical) {
    NicholsData B = build_nichols(M);
    Bosonization X = bosonize(B);
    o.expect(X.A.dim == dim, tag + " dim B#H");
    o.expect(verify_hopf(X.A), tag + " B#H verify_hopf");
    o.expect(verify_bosonization(X), tag + " bosonization maps");
    std::vector<SVec> bs;
    for (int b = 0; b < B.dim; ++b)
      bs.push_back(X.F->theta.unit.reindex([&](int t) { return X.index(b, t); }));  // b # 1
    o.expect(coinvariants(X) == Subspace::span(X.A.dim, bs), tag + " coinvariants = B # 1");
    std::vector<SVec> deg0;
    for (int t = 0; t < X.hdim(); ++t) deg0.push_back(SVec::unit(X.index(0, t)));
    if (generic_coradical) {
      Subspace c = coradical(X.A);
      o.expect(c.dim() == 24 && c == Subspace::span(X.A.dim, deg0), tag + " coradical = degree 0");
    }
    o.expect(coradical_check(X.A, *X.F), tag + " coradical = embedded k^D_m");
  };
  boson(build_M_ik(g, 2, 3), "(2,3)", 96, true);
  boson(build_M_ell(g, 3), "[3]", 96, true);
  boson(build_M_I(g, validate_I(g, {{2, 3}, {2, 9}})), "(2,3)(2,9)", 384, false);
  boson(build_M_IL(g, validate_K(g, {{2, 3}}, {3})), "(2,3)[3]", 384, false);
}

// ------------------------------------------------------------------ 5

void c5(Outcome& o) {
  auto g = GroupDatum::make(12);
  auto run = [&](Family fam, const IndexDatumI& I, const IndexDatumL& L) {
    LiftingData d = zero_lifting(g, fam, I, L);
    NicholsData B = build_nichols(family_module(g, d));
    const std::string tag = show(I.pairs, L.ells);
    const int dm = B.d;
    o.expect(compute_MB(B).dim == dm * (dm + 1) / 2, tag + " dim M(B) = d(d+1)/2");
    auto basis = hochschild_cocycle_basis(B);
    o.expect(static_cast<int>(basis.size()) == dm * (dm + 1) / 2, tag + " cocycle basis size");
    for (const auto& f : basis) o.expect(check_hochschild_cocycle(B.algebra, f), tag + " eps-cocycle identity");
    auto info = generator_info(d);
    for (int a = 0; a < dm; ++a)
      for (int b = a; b < dm; ++b) {
        const GeneratorInfo &u = info[a], &v = info[b];
        bool expect;
        if (u.is_y && v.is_y) expect = u.r != v.r && u.i == v.i;  // eta_rr never, eta_12 iff i = p
        else if (!u.is_y && !v.is_y) expect = true;
        else expect = false;  // mixed
        Bilinear f = elementary(B.dim, B.generator(a), B.generator(b));
        o.expect(check_hochschild_cocycle(B.algebra, f), tag + " elementary form is a cocycle");
        o.expect(is_H_invariant(B, f).ok == expect, tag + " invariance verdict " + B.M.label(a) + " " + B.M.label(b));
      }
  };
  for (const auto& I : enumerate_I(g, 2)) run(Family::A, I, {});
  for (const auto& L : enumerate_L(g, 2)) run(Family::B, {}, L);
  for (const auto& K : enumerate_K(g, 2)) run(Family::C, K.I, K.L);
}

// ------------------------------------------------------------------ 6

void c6(Outcome& o) {
  auto g = GroupDatum::make(12);
  struct Case {
    Family fam;
    IndexDatumI I;
    IndexDatumL L;
  };
  std::vector<Case> cases = {{Family::A, validate_I(g, {{2, 3}, {2, 9}}), {}},
                             {Family::B, {}, validate_L(g, {1, 3})},
                             {Family::C, validate_I(g, {{2, 3}}), validate_L(g, {3})}};
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const std::string tag = std::string(1, family_char(c.fam)) + " seed " + std::to_string(seed);
      LiftingData d = random_lifting(g, c.fam, c.I, c.L, seed);
      DeformationRun run = run_deformation(g, d);
      o.expect(run.report, tag + " cocycle, exp inverse, invariance");
      o.expect(homogeneous_component(run.X.A, run.sigma, 2) == run.eta_tilde, tag + " infinitesimal part");
      o.expect(run.D.comult == run.X.A.comult && run.D.counit == run.X.A.counit, tag + " coalgebra unchanged");
      o.expect(verify_hopf(run.D), tag + " deformed verify_hopf");
      // sigma(a,1) = eps(a) = sigma(1,a)
      const HopfData& A = run.X.A;
      const auto cols = run.sigma.columns();
      bool unital = true;
      for (int a = 0; a < A.dim && unital; ++a) {
        const CycScalar e = A.counit.at(a);
        unital = run.sigma.rows[a].dot(A.unit) == e && cols[a].dot(A.unit) == e;
      }
      o.expect(unital, tag + " sigma normalized");
    }
    o.worst_unit = std::max(o.worst_unit, seconds_since(t0));
  }
}

// ------------------------------------------------------------------ 7

void c7(Outcome& o) {
  std::uint64_t seed = 100;
  auto pipeline = [&](const GroupDatum& g, Family fam, const IndexDatumI& I, const IndexDatumL& L) {
    const std::string tag = "m=" + std::to_string(g.m) + " " + show(I.pairs, L.ells);
    LiftingData d = random_lifting(g, fam, I, L, ++seed);
    const long expect_dim = (1L << (2 * (I.pairs.size() + L.ells.size()))) * 2 * g.m;
    PresentedAlgebra P = build_presented(g, d);
    o.expect(P.A.dim == expect_dim, tag + " presented dim");
    o.expect(P.confluence, tag + " confluence");
    o.expect(hopf_ideal_check(P), tag + " Hopf ideal");
    DeformationRun run = run_deformation(g, d);
    try {
      o.expect(compare_presentation_vs_deformation(P, run.D), tag + " presentation = deformation");
    } catch (const MismatchWitness& e) {
      o.expect(false, tag + " " + e.what());
    }
    o.expect(coradical_check(run.D, *run.X.F), tag + " coradical of deformation");
    std::set<int> firsts;
    for (auto [i, k] : I.pairs) firsts.insert(i);
    if (L.ells.empty() && firsts.size() == I.pairs.size())
      o.expect(P.A.mult == run.X.A.mult && P.A.comult == run.X.A.comult, tag + " collapse to bosonization");
  };
  for (int m : {12, 16}) {
    auto g = GroupDatum::make(m);
    for (const auto& I : enumerate_I(g, 1)) pipeline(g, Family::A, I, {});
    for (const auto& L : enumerate_L(g, 1)) pipeline(g, Family::B, {}, L);
  }
  auto g = GroupDatum::make(12);
  for (const auto& I : enumerate_I(g, 2))
    if (I.pairs.size() == 2) pipeline(g, Family::A, I, {});
  for (const auto& L : enumerate_L(g, 2))
    if (L.ells.size() == 2) pipeline(g, Family::B, {}, L);
  for (const auto& K : enumerate_K(g, 2)) pipeline(g, Family::C, K.I, K.L);
}

// ------------------------------------------------------------------ 8

void c8(Outcome& o) {
  auto g = GroupDatum::make(12);
  for (const YDModule& V : {build_M_ik(g, 2, 3), build_M_ell(g, 3)}) {
    NicholsData B = build_nichols(V);
    YDModule MB = mb_module(B);
    o.expect(MB.dim == 3, V.labels[0] + " dim M(B) = 3");
    o.expect(verify_yd(MB), V.labels[0] + " M(B) is Yetter-Drinfeld");
    o.expect(yd_hom_space(MB, B.M, -1).dim() == 0, V.labels[0] + " Hom(M(B), V) of degree -1 is zero");
  }
}

struct Criterion {
  int id;
  std::string title;
  double limit;
  bool per_unit;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "k^D_m Hopf axioms, theta identities, group-likes, dual (per m)", 5, true, c1},
      {2, "index sets J, I, L, K and their rejections", 1, false, c2},
      {3, "Yetter-Drinfeld axioms, braiding symmetry, dual transport", 30, false, c3},
      {4, "Nichols algebras and bosonizations up to dim 384", 120, false, c4},
      {5, "M(B), epsilon-cocycles, invariance verdicts", 60, false, c5},
      {6, "cocycle engine, 5 seeds per family at rank 2 (per family)", 300, true, c6},
      {7, "presentations, Hopf ideals, comparison, collapse, coradical", 600, false, c7},
      {8, "no degree -1 YD maps M(B) -> V", 30, false, c8},
  };
  bool ok = true;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double total = seconds_since(t0);
    const double measured = c.per_unit ? o.worst_unit : total;
    const bool in_time = measured < c.limit;
    const bool pass = o.failures.empty() && in_time && o.checks > 0;
    ok = ok && pass;
    std::printf("%s  [%d] %s  (%d checks, %.2fs%s, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.checks, measured, c.per_unit ? " worst unit" : "", c.limit);
    for (std::size_t i = 0; i < o.failures.size() && i < 5; ++i) std::printf("        %s\n", o.failures[i].c_str());
    if (!in_time) std::printf("        over the time limit\n");
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
