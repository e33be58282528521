#include <functional>

#include "doctest.h"
#include "hopfforge/yd.hpp"

using namespace hopfforge;

namespace {

// Exponent oracle, independent of the library: w^e = -1 iff e = m/2 mod m.
std::vector<IndexPair> oracle_J(int m) {
  std::vector<IndexPair> out;
  for (int i = 1; i < m / 2; ++i)
    for (int k = 1; k < m; ++k)
      if ((i * k) % m == m / 2) out.emplace_back(i, k);
  return out;
}

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.code();
  }
  return "ok";
}

bool is_identity(const Mat& A) { return A == Mat::identity(A.rows()); }

}  // namespace

TEST_CASE("J at m = 12 and cross-validation") {
  auto g = GroupDatum::make(12);
  std::vector<IndexPair> expect = {{1, 6}, {2, 3}, {2, 9}, {3, 2}, {3, 6}, {3, 10}, {5, 6}};
  CHECK(enumerate_J(g) == expect);
  CHECK(!in_J(g, 1, 1));
  for (int m : {12, 16, 20, 24}) {
    auto gm = GroupDatum::make(m);
    auto J = enumerate_J(gm);
    CHECK(J == oracle_J(m));
    for (auto [i, k] : J) CHECK(make_root_power(gm, static_cast<long>(i) * k) == CycScalar(-1));
  }
}

TEST_CASE("index validation") {
  auto g = GroupDatum::make(12);
  CHECK(validate_I(g, {{2, 9}, {2, 3}}).pairs == std::vector<IndexPair>{{2, 3}, {2, 9}});
  CHECK(code_of([&] { validate_I(g, {{1, 1}}); }) == "NotInJ");
  // 1*3 + 2*6 = 15, not 0 mod 12
  CHECK(code_of([&] { validate_I(g, {{1, 6}, {2, 3}}); }) == "CompatibilityFailed");
  CHECK(validate_I(g, {}).pairs.empty());
  CHECK(code_of([&] { validate_L(g, {2}); }) == "EllNotOdd");
  CHECK(code_of([&] { validate_L(g, {7}); }) == "EllOutOfRange");
  CHECK(code_of([&] { validate_L(g, {0}); }) == "EllOutOfRange");
  CHECK(validate_L(g, {3, 3}).ells.size() == 2);
  CHECK(code_of([&] { validate_K(g, {{2, 3}}, {3}); }) == "ok");
  CHECK(code_of([&] { validate_K(g, {{2, 3}}, {1}); }) == "MixedConditionFailed");
  CHECK(code_of([&] { validate_K(g, {{3, 2}}, {1}); }) == "KNotOdd");
  try {
    validate_K(g, {{2, 3}}, {3, 1});
  } catch (const ValidationError& e) {
    CHECK(e.code() == "MixedConditionFailed");
    CHECK(e.s() == 0);
    CHECK(e.t() == 0);
  }
  std::vector<int> Lodd;
  for (const auto& L : enumerate_L(g, 1)) Lodd.push_back(L.ells[0]);
  CHECK(Lodd == std::vector<int>{1, 3, 5});
  for (const auto& I : enumerate_I(g, 3)) CHECK(code_of([&] { validate_I(g, I.pairs); }) == "ok");
  for (const auto& K : enumerate_K(g, 3)) CHECK(code_of([&] { validate_K(g, K.I.pairs, K.L.ells); }) == "ok");
  CHECK(!enumerate_K(g, 2).empty());
}

TEST_CASE("constructed modules satisfy the YD axioms in both bases") {
  for (int m : {12, 16}) {
    auto g = GroupDatum::make(m);
    for (auto [i, k] : enumerate_J(g))
      for (HBasis b : {HBasis::Theta, HBasis::Phi}) {
        Report r = verify_yd(build_M_ik(g, i, k, b));
        INFO(m, " ", i, " ", k, " ", r.to_text());
        CHECK(r.ok());
      }
    for (int l = 1; l < g.n; l += 2) {
      Report r = verify_yd(build_M_ell(g, l, HBasis::Phi));
      INFO(r.to_text());
      CHECK(r.ok());
      CHECK(verify_yd(build_M_ell(g, l)).ok());
    }
  }
  auto g = GroupDatum::make(12);
  CHECK_THROWS_AS(build_M_ik(g, 1, 1), ValidationError);
  CHECK_THROWS_AS(build_M_ell(g, 2), ValidationError);
  CHECK(build_M_ell(g, 1).coaction != build_M_ell(g, 3).coaction);
}

TEST_CASE("quoted formulas in the phi basis") {
  auto g = GroupDatum::make(12);
  YDModule M = build_M_ik(g, 2, 3, HBasis::Phi);
  const auto& ix = M.F->ix;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 12; ++s) {
      int p = ix.idx(r, s);
      CHECK(M.act(p, 0) == SVec::unit(0, (r == 0 && s == ix.modm(-2)) ? 1 : 0));
      CHECK(M.act(p, 1) == SVec::unit(1, (r == 0 && s == 2) ? 1 : 0));
    }
  YDModule X = build_M_ell(g, 3, HBasis::Phi);
  for (int p = 0; p < 24; ++p) CHECK(X.act(p, 1) == SVec::unit(1, p == ix.idx(0, 6) ? 1 : 0));
  // theta-basis coaction carries exactly two terms
  YDModule T = build_M_ik(g, 2, 3);
  CHECK(T.coaction[0] == SVec::from_entries({{ix.idx(0, -3) * 2 + 0, 1}, {ix.idx(1, 3) * 2 + 1, 1}}));
  CHECK(T.coaction[1] == SVec::from_entries({{ix.idx(1, -3) * 2 + 0, 1}, {ix.idx(0, 3) * 2 + 1, 1}}));
  CHECK(same_structure(change_H_basis(M, HBasis::Theta), T));
}

TEST_CASE("direct sums") {
  auto g = GroupDatum::make(12);
  CHECK(build_M_I(g, validate_I(g, {{2, 3}, {2, 9}})).dim == 4);
  CHECK(build_M_IL(g, validate_K(g, {{2, 3}}, {3})).dim == 4);
  CHECK(build_M_I(g, IndexDatumI{}).dim == 0);
  YDModule L = build_M_L(g, validate_L(g, {3, 3}));
  CHECK(L.dim == 4);
  CHECK(L.labels[2] != L.labels[0]);
  CHECK(verify_yd(L).ok());
  CHECK(verify_yd(build_M_IL(g, validate_K(g, {{2, 3}, {2, 9}}, {3}))).ok());
}

TEST_CASE("braiding is symmetric on admissible pairs") {
  auto g = GroupDatum::make(12);
  YDModule A = build_M_ik(g, 2, 3);
  YDModule B = build_M_ell(g, 3);
  Mat cAA = braiding(A, A);
  CHECK(is_identity(cAA * cAA));
  CHECK(rank(cAA) == 4);
  CHECK(is_identity(braiding(A, B) * braiding(B, A)));
  // every pair drawn from one valid datum
  for (const auto& I : enumerate_I(g, 2)) {
    YDModule M = build_M_I(g, I);
    CHECK(is_identity(braiding(M, M) * braiding(M, M)));
  }
  for (const auto& K : enumerate_K(g, 2)) {
    YDModule M = build_M_IL(g, K);
    CHECK(is_identity(braiding(M, M) * braiding(M, M)));
  }
  // on M_(2,3) the braiding is minus the flip
  Mat flip(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) flip(j * 2 + i, i * 2 + j) = -1;
  CHECK(cAA == flip);
  auto g16 = GroupDatum::make(16);
  CHECK_THROWS_AS(braiding(A, build_M_ell(g16, 3)), BaseMismatch);
}

TEST_CASE("dual transport reproduces the dual-side constructors") {
  for (int m : {12, 16}) {
    auto g = GroupDatum::make(m);
    for (auto [i, k] : enumerate_J(g)) {
      YDModule T = dual_transport(g, group_M_ik(g, i, k));
      CHECK(verify_yd(T).ok());
      CHECK(same_structure(T, build_M_ik(g, i, k)));
      // back and forth
      GroupYD G = dual_transport_back(build_M_ik(g, i, k));
      CHECK(same_structure(dual_transport(g, G), T));
      CHECK(G.rho_g == group_M_ik(g, i, k).rho_g);
      CHECK(G.rho_h == group_M_ik(g, i, k).rho_h);
    }
    for (int l = 1; l < g.n; l += 2) CHECK(same_structure(dual_transport(g, group_M_ell(g, l)), build_M_ell(g, l)));
    YDModule one = dual_transport(g, group_trivial(g));
    CHECK(verify_yd(one).ok());
    const auto& F = *one.F;
    for (int p = 0; p < F.dim(); ++p) CHECK(one.act(p, 0) == SVec::unit(0, F.phi.counit.at(p)));
    CHECK(one.coaction[0] == F.phi.unit.reindex([](int p) { return p; }));
  }
  auto g = GroupDatum::make(12);
  GroupYD bad = group_M_ik(g, 2, 3);
  bad.degrees[1] = DihedralElem{0, 2};
  CHECK_THROWS_AS(dual_transport(g, bad), InvalidYDInput);
  bad = group_M_ik(g, 2, 3);
  bad.rho_h(0, 0) = 2;
  CHECK_THROWS_AS(dual_transport(g, bad), InvalidYDInput);
}

TEST_CASE("example block: M_(i,n) with i odd in the basis a1 +- a2") {
  auto g = GroupDatum::make(12);
  YDModule M = build_M_ik(g, 1, 6, HBasis::Phi);
  Mat P(2, 2);
  P(0, 0) = 1;
  P(1, 0) = 1;
  P(0, 1) = 1;
  P(1, 1) = -1;
  YDModule N = change_V_basis(M, P, {"x", "y"});
  CHECK(verify_yd(N).ok());
  const auto& F = *N.F;
  auto tensor = [](const SVec& h, int v) { return h.reindex([v](int p) { return p * 2 + v; }); };
  CHECK(N.coaction[0] == tensor(character(F, 2), 0));
  CHECK(N.coaction[1] == tensor(character(F, 3), 1));
}

TEST_CASE("YD morphisms") {
  auto g = GroupDatum::make(12);
  YDModule V = build_M_ik(g, 2, 3);
  Subspace E = yd_hom_space(V, V, 0);
  CHECK(E.contains(SVec::from_entries({{0, 1}, {3, 1}})));
  CHECK(yd_hom_space(V, V, 1).dim() == 0);
  // relations of the exterior algebra: symmetric tensors in V (x) V, degree 2
  YDModule VV = tensor_product(V, V);
  CHECK(verify_yd(VV).ok());
  std::vector<SVec> sym;
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j) sym.push_back(SVec::unit(i * 2 + j) + SVec::unit(j * 2 + i));
  YDModule R = submodule(VV, Subspace::span(4, sym), "r");
  CHECK(R.dim == 3);
  CHECK(R.degrees == std::vector<int>{2, 2, 2});
  CHECK(verify_yd(R).ok());
  CHECK(yd_hom_space(R, V, -1).dim() == 0);
  // the antisymmetric line is a submodule too; a non-stable line is rejected
  CHECK_NOTHROW(submodule(VV, Subspace::span(4, {SVec::unit(1) - SVec::unit(2)}), "a"));
  CHECK_THROWS_AS(submodule(VV, Subspace::span(4, {SVec::unit(0) + SVec::unit(1)}), "z"), InvalidYDInput);
  // a module in another basis is converted before solving
  CHECK(yd_hom_space(V, build_M_ik(g, 2, 3, HBasis::Phi), 0).dim() == E.dim());
}
