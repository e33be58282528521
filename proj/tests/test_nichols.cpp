#include "doctest.h"
#include "hopfforge/nichols.hpp"

using namespace hopfforge;

TEST_CASE("exterior algebras of the module families") {
  auto g = GroupDatum::make(12);
  NicholsData B = build_nichols(build_M_ik(g, 2, 3));
  CHECK(B.dim == 4);
  Report r = verify_nichols(B);
  INFO(r.to_text());
  CHECK(r.ok());
  // Delta(y1 y2) = y1y2 (x) 1 + y1 (x) y2 - y2 (x) y1 + 1 (x) y1y2
  const int y1 = B.generator(0);
  const int y2 = B.generator(1);
  const int top = 3;
  CHECK(B.algebra.mul_basis(y1, y2) == SVec::unit(top));
  CHECK(B.algebra.mul_basis(y2, y1) == SVec::unit(top, -1));
  CHECK(B.algebra.mul_basis(y1, y1).is_zero());
  CHECK(B.algebra.comult[top] ==
        SVec::from_entries({{top * 4, 1}, {y1 * 4 + y2, 1}, {y2 * 4 + y1, -1}, {top, 1}}));
  // R: symmetric tensors, including squares
  CHECK(B.relations.dim() == 3);
  CHECK(B.relations.contains(SVec::unit(0)));
  CHECK(B.relations.contains(SVec::unit(1) + SVec::unit(2)));

  NicholsData B2 = build_nichols(build_M_I(g, validate_I(g, {{2, 3}, {2, 9}})));
  CHECK(B2.dim == 16);
  CHECK(verify_nichols(B2).ok());
  CHECK(build_nichols(zero_module(g)).dim == 1);
  for (const auto& K : enumerate_K(g, 2)) {
    NicholsData BK = build_nichols(build_M_IL(g, K));
    CHECK(BK.dim == 16);
    CHECK(braided_primitives(BK).dim() == 4);
  }
  for (const auto& L : enumerate_L(g, 2)) CHECK(build_nichols(build_M_L(g, L)).dim == (1 << (2 * L.ells.size())));
}

TEST_CASE("unsupported braidings are rejected") {
  auto g = GroupDatum::make(12);
  CHECK_THROWS_AS(build_nichols(dual_transport(g, group_trivial(g))), UnsupportedModule);
  // (1,1) is outside J: c(y1 (x) y1) != -y1 (x) y1
  CHECK_THROWS_AS(build_nichols(dual_transport(g, group_M_ik(g, 1, 1))), UnsupportedModule);
}

TEST_CASE("bosonization of B(M_(2,3))") {
  auto g = GroupDatum::make(12);
  Bosonization X = bosonize(build_nichols(build_M_ik(g, 2, 3)));
  CHECK(X.A.dim == 96);
  Report h = verify_hopf(X.A);
  INFO(h.to_text());
  CHECK(h.ok());
  Report b = verify_bosonization(X);
  INFO(b.to_text());
  CHECK(b.ok());
  CHECK(coradical(X.A).dim() == 24);
  // the degree-zero part is the coradical
  std::vector<SVec> deg0;
  for (int t = 0; t < 24; ++t) deg0.push_back(SVec::unit(X.index(0, t)));
  CHECK(coradical(X.A) == Subspace::span(96, deg0));
}

TEST_CASE("trivial bosonization equals H") {
  auto g = GroupDatum::make(12);
  Bosonization X = bosonize(build_nichols(zero_module(g)));
  const HopfData& H = X.F->theta;
  CHECK(X.A.mult == H.mult);
  CHECK(X.A.comult == H.comult);
  CHECK(X.A.antipode == H.antipode);
  CHECK(X.A.counit == H.counit);
  CHECK(coinvariants(X).dim() == 1);
  CHECK(coinvariants(H, [&] {
          std::vector<SVec> id;
          for (int t = 0; t < H.dim; ++t) id.push_back(SVec::unit(t));
          return id;
        }(), H).dim() == 1);
}

TEST_CASE("M(B)") {
  auto g = GroupDatum::make(12);
  NicholsData B = build_nichols(build_M_ik(g, 2, 3));
  MBResult r = compute_MB(B);
  CHECK(r.dim == 3);
  // R maps onto M(B)
  std::vector<SVec> lifted_R;
  for (const auto& v : B.relations.basis())
    lifted_R.push_back(v.reindex([&](int p) { return B.generator(p / B.d) * B.dim + B.generator(p % B.d); }));
  Subspace img = Subspace::span(r.ambient, lifted_R).sum(r.relations);
  Subspace full = r.relations;
  for (const auto& v : r.lifted) full = full.sum(Subspace::span(r.ambient, {v}));
  CHECK(img == full);

  // k[x]/(x^2)
  std::vector<SVec> mult = {SVec::unit(0), SVec::unit(1), SVec::unit(1), SVec()};
  CHECK(compute_MB(2, mult, {1}).dim == 1);

  NicholsData B2 = build_nichols(build_M_I(g, validate_I(g, {{2, 3}, {2, 9}})));
  CHECK(compute_MB(B2).dim == 10);
}

TEST_CASE("no YD maps M(B) -> V of degree -1") {
  auto g = GroupDatum::make(12);
  for (const YDModule& V : {build_M_ik(g, 2, 3), build_M_ell(g, 3)}) {
    NicholsData B = build_nichols(V);
    YDModule MB = mb_module(B);
    CHECK(MB.dim == 3);
    CHECK(verify_yd(MB).ok());
    CHECK(yd_hom_space(MB, B.M, -1).dim() == 0);
    // sanity: the identity of V is found in degree 0
    CHECK(yd_hom_space(B.M, B.M, 0).dim() >= 1);
  }
}
