#include <random>

#include "doctest.h"
#include "hopfforge/linalg.hpp"

using namespace hopfforge;

namespace {

CycScalar rnd(std::mt19937& rng, const CyclotomicField& f) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::uniform_int_distribution<int> e(0, f.m() - 1);
  int c = d(rng);
  return c == 0 ? CycScalar() : CycScalar(c) * f.root_power(e(rng));
}

// Random subspace built as the span of k random sparse-ish vectors, some of
// them deliberately dependent.
Subspace random_subspace(std::mt19937& rng, int n, const CyclotomicField& f) {
  std::uniform_int_distribution<int> kd(0, n);
  int k = kd(rng);
  std::vector<SVec> g;
  for (int i = 0; i < k; ++i) {
    std::vector<CycScalar> v(n);
    for (int j = 0; j < n; ++j)
      if (rng() % 3 == 0) v[j] = rnd(rng, f);
    g.push_back(SVec::from_dense(v));
  }
  if (k >= 2) g.push_back(g[0] + g[1]);
  return Subspace::span(n, g);
}

}  // namespace

TEST_CASE("kernel and image basics") {
  CHECK(kernel(Mat::identity(3)).dim() == 0);
  CHECK(image(Mat(3, 3)).dim() == 0);
  Mat m(1, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(k == Subspace::span(2, std::vector<SVec>{SVec::from_dense({1, -1})}));
  CHECK(k.contains(SVec::from_dense({CycScalar(-3), CycScalar(3)})));
}

TEST_CASE("intersection and annihilator") {
  Subspace a = Subspace::span(2, std::vector<SVec>{SVec::unit(0)});
  Subspace b = Subspace::span(2, std::vector<SVec>{SVec::unit(1)});
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.intersect(a) == a);
  CHECK(a.sum(b) == Subspace::full(2));
  CHECK(a.annihilator() == b);
}

TEST_CASE("solve") {
  const auto& f = CyclotomicField::get(12);
  Mat m(2, 2);
  m(0, 0) = f.root_power(1);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = f.root_power(11);
  // rows are proportional: w*(1, w^-1) = (w, 1)
  CHECK(rank(m) == 1);
  CHECK(!solve(m, {CycScalar(1), CycScalar(0)}).has_value());
  auto x = solve(m, {f.root_power(1), CycScalar(1)});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == Vec{f.root_power(1), CycScalar(1)});
  CHECK_THROWS_AS(solve(m, {CycScalar(1)}), DimensionMismatch);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(11);
  const auto& f = CyclotomicField::get(12);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + static_cast<int>(rng() % 7);
    int c = 1 + static_cast<int>(rng() % 7);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (rng() % 2) m(i, j) = rnd(rng, f);
    Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    for (const auto& v : k.basis()) {
      Vec img = m.apply(v.to_dense(c));
      for (const auto& x : img) CHECK(x.is_zero());
    }
    std::vector<SVec> cols;
    for (int j = 0; j < c; ++j) cols.push_back(m.column(j));
    CHECK(kernel_of_columns(c, cols) == k);
    CHECK(image_of_columns(r, cols) == image(m));
  }
}

TEST_CASE("dimension formula on random subspace pairs") {
  std::mt19937 rng(5);
  const auto& f = CyclotomicField::get(12);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 20);
    Subspace u = random_subspace(rng, n, f);
    Subspace v = random_subspace(rng, n, f);
    Subspace s = u.sum(v);
    Subspace i = u.intersect(v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(s.contains(u));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(u.dim() + u.annihilator().dim() == n);
    CHECK(u.annihilator().annihilator() == u);
    // canonical form is independent of generator order
    std::vector<SVec> g = u.basis();
    std::reverse(g.begin(), g.end());
    CHECK(Subspace::span(n, g) == u);
  }
}

TEST_CASE("sparse solve") {
  std::vector<SVec> cols{SVec::from_dense({1, 0, 1}), SVec::from_dense({0, 1, 1})};
  auto x = solve_columns(cols, SVec::from_dense({2, 3, 5}));
  REQUIRE(x.has_value());
  CHECK(*x == SVec::from_dense({2, 3}));
  CHECK(!solve_columns(cols, SVec::from_dense({1, 1, 1})).has_value());
}
